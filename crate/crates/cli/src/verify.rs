//! Batch verification: the golden-table diff, the algebraic identity
//! battery, and the exhaustive pair scans.
//!
//! Every suite returns a [`Report`] of named checks; a check failure
//! carries enough detail to locate the offending instance.  The scans are
//! *reported, never assumed*: a pair of words violating the reversal
//! characterization fails the suite and is printed in full.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use freelie::lie;
use freelie::ncpoly::{NcPoly, Ring};
use freelie::partitions::{self, Tabloid};
use freelie::pascal;
use freelie::symgroup;
use freelie::words::{self, Word};

use crate::golden;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "checks": self.checks.len(),
            "failures": self.failures().iter().map(|c| {
                serde_json::json!({ "check": c.name, "detail": c.detail })
            }).collect::<Vec<_>>(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} — {}\n", c.name, c.detail));
        }
        let failed = self.failures().len();
        out.push_str(&format!(
            "{}: {} checks, {} failed\n",
            self.suite,
            self.checks.len(),
            failed
        ));
        out
    }
}

pub fn run_suite(name: &str, max_n: Option<usize>) -> Option<Report> {
    match name {
        "appendix" => Some(run_appendix()),
        "identities" => Some(run_identities(max_n.unwrap_or(10))),
        "conjectures" => Some(run_conjectures(max_n.unwrap_or(10))),
        _ => None,
    }
}

/// Diff the computed two-letter kernel tables mod 2 against the golden
/// file, per (n, s): set equality and listing order.
pub fn run_appendix() -> Report {
    let mut report = Report::new("appendix");
    let golden = golden::appendix_m2();
    for n in 3..=10usize {
        let computed = match pascal::kernel_subsets(n, 2) {
            Ok(c) => c,
            Err(e) => {
                report.push(format!("appendix-n{n}"), false, format!("error: {e}"));
                continue;
            }
        };
        let mut computed_rows: BTreeMap<(usize, usize), Vec<u64>> = BTreeMap::new();
        for (s, masks) in computed {
            computed_rows.insert((n, s), masks);
        }
        let golden_rows: BTreeMap<(usize, usize), Vec<u64>> = golden
            .iter()
            .filter(|((gn, _), _)| *gn == n)
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        let mut mismatches = Vec::new();
        let mut keys: Vec<(usize, usize)> = computed_rows
            .keys()
            .chain(golden_rows.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        for key in keys {
            let got = computed_rows.get(&key).cloned().unwrap_or_default();
            let want = golden_rows.get(&key).cloned().unwrap_or_default();
            if got != want {
                let fmt = |v: &[u64]| {
                    v.iter()
                        .map(|&m| format!("{{{}}}", pascal::format_subset(m)))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                mismatches.push(format!(
                    "s={}: computed [{}] vs table [{}]",
                    key.1,
                    fmt(&got),
                    fmt(&want)
                ));
            }
        }
        let total: usize = golden_rows.values().map(Vec::len).sum();
        report.push(
            format!("appendix-n{n}"),
            mismatches.is_empty(),
            if mismatches.is_empty() {
                format!("{total} subsets reproduced")
            } else {
                mismatches.join("; ")
            },
        );
    }
    report
}

fn count_failures<I: IntoIterator<Item = Option<String>>>(iter: I) -> (usize, usize, String) {
    let mut total = 0;
    let mut failed = 0;
    let mut first = String::new();
    for item in iter {
        total += 1;
        if let Some(msg) = item {
            if failed == 0 {
                first = msg;
            }
            failed += 1;
        }
    }
    (total, failed, first)
}

fn verdict(report: &mut Report, name: &str, total: usize, failed: usize, first: String) {
    report.push(
        name,
        failed == 0,
        if failed == 0 {
            format!("{total} instances checked")
        } else {
            format!("{failed}/{total} failed; first: {first}")
        },
    );
}

/// The algebraic identity battery, exhaustive up to per-check size caps.
pub fn run_identities(max_n: usize) -> Report {
    let mut report = Report::new("identities");

    // adjoint of a reversal flips the sign for even lengths
    let (t, f, msg) = count_failures((1..=max_n.min(10)).flat_map(|n| {
        words::all_words(2, n).into_iter().map(move |w| {
            let p = lie::adjoint(&w, Ring::Int);
            let q = lie::adjoint(&w.reversed(), Ring::Int);
            let expected = if n % 2 == 1 { p.clone() } else { p.neg() };
            (q != expected).then(|| format!("word {w}"))
        })
    }));
    verdict(&mut report, "reversal-sign", t, f, msg);

    // recursion, factor sums at every length, and the scalar oracle agree
    let mut cases: Vec<(Word, usize)> = Vec::new();
    for n in 1..=max_n.min(8) {
        cases.extend(words::all_words(2, n).into_iter().map(|w| (w, 2)));
    }
    for n in 1..=max_n.min(6) {
        cases.extend(words::all_words(3, n).into_iter().map(|w| (w, 3)));
    }
    let (t, f, msg) = count_failures(cases.into_iter().map(|(w, r)| {
        let reference = lie::adjoint(&w, Ring::Int);
        for len in 1..=w.len() {
            match lie::adjoint_via_factors(&w, len, Ring::Int) {
                Ok(p) if p == reference => {}
                _ => return Some(format!("factor length {len} on {w}")),
            }
        }
        match lie::adjoint_oracle(&w, r, Ring::Int) {
            Ok(p) if p == reference => None,
            _ => Some(format!("oracle on {w}")),
        }
    }));
    verdict(&mut report, "adjoint-three-way", t, f, msg);

    // group ring formulas: product vs descent sums, transpose, support size
    let (t, f, msg) = count_failures((1..=max_n.min(12)).map(|n| {
        let a = symgroup::l_n(n, Ring::Int);
        if a != symgroup::l_n_via_descents(n, Ring::Int) {
            return Some(format!("product/descent mismatch at n={n}"));
        }
        if a.support_size() != 1 << (n - 1) {
            return Some(format!("support size at n={n}"));
        }
        if n <= 8 {
            let b = symgroup::l_n_star(n, Ring::Int);
            if b != symgroup::l_n_star_via_transpose(n, Ring::Int) {
                return Some(format!("adjoint element mismatch at n={n}"));
            }
            for (p, c) in b.terms() {
                if *c != a.coeff(&p.inverse()) {
                    return Some(format!("transpose coefficient at n={n}"));
                }
            }
        }
        None
    }));
    verdict(&mut report, "bracketing-element-formulas", t, f, msg);

    // the place action on distinct letters reproduces the bracketing and
    // the adjoint
    let (t, f, msg) = count_failures((1..=max_n.min(9)).map(|n| {
        let word = Word::new((0..n as u8).collect());
        if symgroup::act_on_word(&word, &symgroup::l_n(n, Ring::Int)).unwrap()
            != lie::bracketing(&word, Ring::Int)
        {
            return Some(format!("bracketing action at n={n}"));
        }
        if symgroup::act_on_word(&word, &symgroup::l_n_star(n, Ring::Int)).unwrap()
            != lie::adjoint(&word, Ring::Int)
        {
            return Some(format!("adjoint action at n={n}"));
        }
        None
    }));
    verdict(&mut report, "place-action-bracketing", t, f, msg);

    // tabloid image of w·l_n* equals l_n·{w}; in particular the kernels
    // coincide
    let mut cases: Vec<(Word, usize)> = Vec::new();
    for n in 2..=max_n.min(9) {
        cases.extend(
            words::all_words(2, n)
                .into_iter()
                .filter(|w| w.alph_size() == 2)
                .map(|w| (w, 2)),
        );
    }
    for n in 3..=max_n.min(6) {
        cases.extend(
            words::all_words(3, n)
                .into_iter()
                .filter(|w| w.alph_size() == 3)
                .map(|w| (w, 3)),
        );
    }
    let (t, f, msg) = count_failures(cases.into_iter().map(|(w, r)| {
        let n = w.len();
        let tab = partitions::word_to_tabloid(&w, r).unwrap();
        let lhs = partitions::act(&symgroup::l_n(n, Ring::Int), &tab).unwrap();
        let rhs = symgroup::act_on_word(&w, &symgroup::l_n_star(n, Ring::Int)).unwrap();
        if lhs.is_zero() != rhs.is_zero() {
            return Some(format!("kernel mismatch on {w}"));
        }
        for (u, c) in rhs.terms() {
            let t = partitions::word_to_tabloid(u, r).unwrap();
            if lhs.coeff(&t) != *c {
                return Some(format!("coefficient mismatch on {w}"));
            }
        }
        None
    }));
    verdict(&mut report, "word-tabloid-equivalence", t, f, msg);

    // telescoping shuffle identity over all factorizations
    let (t, f, msg) = count_failures((1..=max_n.min(10)).flat_map(|n| {
        words::all_words(2, n).into_iter().map(move |w| {
            let mut total = NcPoly::zero(Ring::Int);
            for cut in 0..=w.len() {
                let s = w.factor(0, cut).reversed();
                let t = w.factor(cut, w.len());
                let term = NcPoly::word(s, Ring::Int)
                    .shuffle(&NcPoly::word(t, Ring::Int))
                    .unwrap();
                let signed = if cut % 2 == 0 { term } else { term.neg() };
                total = total.add(&signed).unwrap();
            }
            (!total.is_zero()).then(|| format!("word {w}"))
        })
    }));
    verdict(&mut report, "shuffle-telescoping", t, f, msg);

    // words annihilated over any of the rings use few distinct letters
    let mut cases: Vec<(Word, u64)> = Vec::new();
    for m in [0u64, 2, 3, 4] {
        for r in 2..=4usize {
            let cap = match r {
                2 => max_n.min(8),
                3 => max_n.min(7),
                _ => max_n.min(6),
            };
            for n in 1..=cap {
                cases.extend(words::all_words(r, n).into_iter().map(move |w| (w, m)));
            }
        }
    }
    let (t, f, msg) = count_failures(cases.into_iter().map(|(w, m)| {
        let ring = Ring::from_flag(m).unwrap();
        let vanishes = lie::adjoint(&w, ring).is_zero();
        if vanishes && w.alph_size() > w.len().div_ceil(2) {
            Some(format!("mod {m} kernel word {w} uses too many letters"))
        } else {
            None
        }
    }));
    verdict(&mut report, "alphabet-bound", t, f, msg);

    // over the integers the kernel words are powers and even palindromes
    let mut cases: Vec<Word> = Vec::new();
    for n in 1..=max_n.min(10) {
        cases.extend(words::all_words(2, n));
    }
    for n in 1..=max_n.min(7) {
        cases.extend(words::all_words(3, n));
    }
    let (t, f, msg) = count_failures(cases.into_iter().map(|w| {
        let vanishes = lie::adjoint(&w, Ring::Int).is_zero();
        let expected = w.is_power() || w.is_even_palindrome();
        (vanishes != expected).then(|| format!("word {w}"))
    }));
    verdict(&mut report, "integer-kernel-words", t, f, msg);

    // closed form for tabloids annihilated over the integers
    let (t, f, msg) = count_failures((2..=max_n.min(8)).flat_map(|n| {
        let ln = symgroup::l_n(n, Ring::Int);
        (1..=n).flat_map(move |r| partitions::enumerate(n, r).unwrap()).map(move |t| {
            let direct = partitions::act(&ln, &t).unwrap().is_zero();
            (direct != partitions::kernel_characterize_int(&t)).then(|| format!("tabloid {t}"))
        })
    }));
    verdict(&mut report, "tabloid-kernel-closed-form", t, f, msg);

    // single-b words: the closed adjoint formula and the carry criterion
    let (t, f, msg) = count_failures((0..=12usize).flat_map(|k| (0..=(12 - k)).map(move |l| (k, l))).map(|(k, l)| {
        if k + l == 0 {
            return None;
        }
        let mut letters = vec![0u8; k];
        letters.push(1);
        letters.extend(std::iter::repeat_n(0, l));
        let word = Word::new(letters);
        let c = num_integer::binomial(BigInt::from(k + l), BigInt::from(k));
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let mut b_first = vec![1u8];
        b_first.extend(std::iter::repeat_n(0, k + l));
        let mut a_b = vec![0u8, 1];
        a_b.extend(std::iter::repeat_n(0, k + l - 1));
        let expected = NcPoly::monomial(Word::new(b_first), &c * sign, Ring::Int)
            .add(&NcPoly::monomial(Word::new(a_b), &c * (-sign), Ring::Int))
            .unwrap();
        if lie::adjoint(&word, Ring::Int) != expected {
            return Some(format!("closed form at k={k} l={l}"));
        }
        for m in [2u64, 3, 4, 6, 12] {
            let via_carries = pascal::power_word_in_support(k as u64, l as u64, m).unwrap();
            let via_adjoint = lie::in_support(&word, m).unwrap();
            if via_carries != via_adjoint {
                return Some(format!("carry criterion at k={k} l={l} m={m}"));
            }
        }
        None
    }));
    verdict(&mut report, "single-letter-block-words", t, f, msg);

    // the gcd invariant: coefficient gcd, coordinate gcd, witness value
    let (t, f, msg) = count_failures((1..=max_n.min(8)).flat_map(|n| {
        words::all_words(2, n).into_iter().map(move |w| {
            let c = lie::coefficient_gcd(&w);
            let coords = lie::lyndon_coordinates(&w, 2).unwrap();
            if coords.content() != c {
                return Some(format!("coordinate gcd mismatch on {w}"));
            }
            match lie::witness_polynomial(&w) {
                Ok(q) => {
                    let target = NcPoly::word(w.clone(), Ring::Int);
                    (q.scalar_product(&target).unwrap() != c)
                        .then(|| format!("witness value mismatch on {w}"))
                }
                Err(_) => (!c.is_zero()).then(|| format!("missing witness on {w}")),
            }
        })
    }));
    verdict(&mut report, "gcd-invariant-routes", t, f, msg);

    // computing mod m directly agrees with reducing the integer result
    let (t, f, msg) = count_failures((1..=max_n.min(8)).flat_map(|n| {
        words::all_words(2, n).into_iter().map(move |w| {
            for m in [2u64, 3, 4, 5] {
                if lie::adjoint(&w, Ring::Mod(m)) != lie::adjoint(&w, Ring::Int).reduce_mod(m).unwrap()
                {
                    return Some(format!("mod {m} on {w}"));
                }
            }
            None
        })
    }));
    verdict(&mut report, "mod-reduction", t, f, msg);

    // multilinear side: quotient identity and the tabloid action image
    let (t, f, msg) = count_failures((2..=max_n.min(11)).flat_map(|n| {
        let full = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        (1..full).map(move |mask| {
            let h = pascal::h(n, mask).unwrap();
            let p = pascal::p(n, mask).unwrap();
            let mut rebuilt = pascal::MPoly::zero();
            for (v, c) in p.terms() {
                rebuilt = rebuilt.add(&pascal::MPoly::monomial(v.0 | 0b01, c.clone()));
                rebuilt = rebuilt.sub(&pascal::MPoly::monomial(v.0 | 0b10, c.clone()));
            }
            (rebuilt != h).then(|| format!("n={n} I={{{}}}", pascal::format_subset(mask)))
        })
    }));
    verdict(&mut report, "pascal-quotient", t, f, msg);

    let (t, f, msg) = count_failures((2..=max_n.min(9)).flat_map(|n| {
        let ln = symgroup::l_n(n, Ring::Int);
        let full = (1u64 << n) - 1;
        (1..full).map(move |mask| {
            let complement = full & !mask;
            let t = Tabloid::new(n, vec![complement, mask]).unwrap();
            let image = partitions::act(&ln, &t).unwrap();
            let mut expected = pascal::MPoly::zero();
            for (u, c) in image.terms() {
                expected = expected.add(&pascal::MPoly::monomial(u.blocks()[1], c.clone()));
            }
            (pascal::h(n, mask).unwrap() != expected)
                .then(|| format!("n={n} I={{{}}}", pascal::format_subset(mask)))
        })
    }));
    verdict(&mut report, "pascal-tabloid-action", t, f, msg);

    let (t, f, msg) = count_failures((3..=max_n.min(10)).flat_map(|n| {
        let full = (1u64 << n) - 1;
        (1..full).filter(|m| m.count_ones() >= 2).map(move |mask| {
            (pascal::p_decomposition(n, mask).unwrap() != pascal::p(n, mask).unwrap())
                .then(|| format!("n={n} I={{{}}}", pascal::format_subset(mask)))
        })
    }));
    verdict(&mut report, "pascal-decomposition", t, f, msg);

    // sign of the reversal involution on subsets
    let (t, f, msg) = count_failures((2..=max_n.min(10)).flat_map(|n| {
        let full = (1u64 << n) - 1;
        (1..=full).map(move |mask| {
            let direct = pascal::p(n, mask).unwrap();
            let mirrored = pascal::p(n, pascal::tau_subset(n, mask)).unwrap();
            let expected = if n % 2 == 1 { direct.clone() } else { direct.neg() };
            if mirrored != expected {
                return Some(format!("n={n} I={{{}}}", pascal::format_subset(mask)));
            }
            if n % 2 == 0 && pascal::tau_subset(n, mask) == mask && !direct.is_zero() {
                return Some(format!("fixed subset with nonzero value at n={n}"));
            }
            None
        })
    }));
    verdict(&mut report, "pascal-reversal-sign", t, f, msg);

    // row sum invariant: divisibility over kernels, specialization, and
    // the named length-9 instances
    let (t, f, msg) = count_failures([2u64, 3, 4].into_iter().flat_map(|m| {
        (2..=max_n.min(10)).map(move |n| {
            for (_, masks) in pascal::kernel_subsets(n, m).unwrap() {
                for mask in masks {
                    let nn = pascal::n_invariant(n, mask).unwrap();
                    if !(nn % BigInt::from(m)).is_zero() {
                        return Some(format!(
                            "m={m} n={n} I={{{}}}",
                            pascal::format_subset(mask)
                        ));
                    }
                }
            }
            None
        })
    }));
    verdict(&mut report, "row-sum-divisibility", t, f, msg);

    let (t, f, msg) = count_failures((2..=max_n.min(10)).flat_map(|n| {
        let full = (1u64 << n) - 1;
        (1..=full).map(move |mask| {
            let s = mask.count_ones() as usize;
            let spec = pascal::p(n, mask).unwrap().specialize_rest_equal();
            let expected = pascal::n_invariant(n, mask).unwrap();
            let ok = if expected.is_zero() {
                !spec.contains_key(&(s - 1))
            } else {
                spec.get(&(s - 1)) == Some(&expected)
            } && spec.keys().all(|&d| d == s - 1);
            (!ok).then(|| format!("n={n} I={{{}}}", pascal::format_subset(mask)))
        })
    }));
    verdict(&mut report, "row-sum-specialization", t, f, msg);

    {
        let a = pascal::n_invariant(9, pascal::parse_subset("3,4,7").unwrap()).unwrap();
        let b = pascal::n_invariant(9, pascal::parse_subset("2,3,4,7").unwrap()).unwrap();
        let c = pascal::n_invariant(9, pascal::parse_subset("3,4,7,8").unwrap()).unwrap();
        let distinct = pascal::p(9, pascal::parse_subset("2,3,4,7").unwrap()).unwrap()
            != pascal::p(9, pascal::parse_subset("3,4,7,8").unwrap()).unwrap();
        let pass = a.is_zero() && b == BigInt::from(-8) && c == BigInt::from(-8) && distinct;
        report.push(
            "row-sum-named-instances",
            pass,
            format!("N_9(3,4,7)={a}, N_9(2,3,4,7)={b}, N_9(3,4,7,8)={c}, polynomials distinct: {distinct}"),
        );
    }

    // 4-letter preimages of the exceptional 3-letter kernel word mod 2
    {
        let word = Word::new(vec![0, 1, 0, 2, 1, 0, 1]);
        let kernel = lie::adjoint(&word, Ring::Mod(2)).is_zero();
        let mut preimages = 0usize;
        let mut nonzero = 0usize;
        for code in 0..81usize {
            let map = [
                (code % 3) as u8,
                (code / 3 % 3) as u8,
                (code / 9 % 3) as u8,
                (code / 27) as u8,
            ];
            let mut onto = [false; 3];
            for &v in &map {
                onto[v as usize] = true;
            }
            if !onto.iter().all(|&b| b) {
                continue;
            }
            let choices: Vec<Vec<u8>> = word
                .letters()
                .iter()
                .map(|&target| (0..4u8).filter(|&a| map[a as usize] == target).collect())
                .collect();
            let mut stack = vec![0usize; word.len()];
            'outer: loop {
                let candidate: Vec<u8> = stack
                    .iter()
                    .zip(&choices)
                    .map(|(&i, options)| options[i])
                    .collect();
                let u = Word::new(candidate);
                if u.alph_size() == 4 {
                    preimages += 1;
                    if !lie::adjoint(&u, Ring::Mod(2)).is_zero() {
                        nonzero += 1;
                    }
                }
                let mut pos = word.len();
                loop {
                    if pos == 0 {
                        break 'outer;
                    }
                    pos -= 1;
                    if stack[pos] + 1 < choices[pos].len() {
                        stack[pos] += 1;
                        for slot in stack.iter_mut().skip(pos + 1) {
                            *slot = 0;
                        }
                        break;
                    }
                }
            }
        }
        report.push(
            "surjection-preimages",
            kernel && preimages > 0 && nonzero == preimages,
            format!(
                "3-letter word in kernel: {kernel}; {nonzero}/{preimages} full preimages outside the kernel"
            ),
        );
    }

    report
}

/// The exhaustive pair scans and the small structured kernel families.
/// Violations are listed verbatim.
pub fn run_conjectures(max_n: usize) -> Report {
    let mut report = Report::new("conjectures");
    let cap = |s: &[String]| {
        let shown: Vec<&str> = s.iter().take(6).map(String::as_str).collect();
        let mut text = shown.join("; ");
        if s.len() > 6 {
            text.push_str(&format!("; … ({} total)", s.len()));
        }
        text
    };

    for n in 2..=max_n {
        match lie::scan_twin_pairs(n, 2) {
            Ok(r) => report.push(
                format!("twin-word-scan-n{n}"),
                r.violations.is_empty(),
                if r.violations.is_empty() {
                    format!(
                        "{} support words, {} twin / {} anti-twin pairs, all by reversal",
                        r.support_count,
                        r.twin_pairs.len(),
                        r.anti_twin_pairs.len()
                    )
                } else {
                    cap(&r.violations)
                },
            ),
            Err(e) => report.push(format!("twin-word-scan-n{n}"), false, format!("error: {e}")),
        }
    }

    for n in 2..=max_n {
        let mut violations = Vec::new();
        let mut shapes = 0usize;
        for s in 1..=(n / 2) {
            match partitions::scan_tabloid_pairs(n, &[n - s, s]) {
                Ok(r) => {
                    shapes += 1;
                    violations.extend(r.violations);
                }
                Err(e) => violations.push(format!("shape ({},{s}): error {e}", n - s)),
            }
        }
        report.push(
            format!("tabloid-scan-n{n}"),
            violations.is_empty(),
            if violations.is_empty() {
                format!("{shapes} two-block shapes, images classified by reversal only")
            } else {
                cap(&violations)
            },
        );
    }

    for n in 2..=max_n {
        match pascal::scan_pascal_pairs(n) {
            Ok(r) => report.push(
                format!("pascal-scan-n{n}"),
                r.violations.is_empty(),
                if r.violations.is_empty() {
                    format!(
                        "{} nonzero polynomials, {} equal / {} negated pairs",
                        r.nonzero_count,
                        r.equal_pairs.len(),
                        r.negated_pairs.len()
                    )
                } else {
                    cap(&r.violations)
                },
            ),
            Err(e) => report.push(format!("pascal-scan-n{n}"), false, format!("error: {e}")),
        }
    }

    // structured kernel families mod 2: at odd n the palindrome and hook
    // tabloids are expected to be the only solutions with the maximal
    // number of parts, and at even n the symmetric pairing the only
    // solution of all-pairs type
    for n in (5..=max_n).filter(|n| n % 2 == 1) {
        let r = n.div_ceil(2);
        match partitions::kernel_enumerate(n, 2, r) {
            Ok(found) => {
                let mut expected = vec![
                    partitions::odd_palindrome_tabloid(n).unwrap(),
                    partitions::hook_tabloid(n).unwrap(),
                ];
                expected.sort_unstable();
                let mut got = found.clone();
                got.sort_unstable();
                report.push(
                    format!("odd-max-part-solutions-n{n}"),
                    got == expected,
                    format!(
                        "{} solutions with {r} parts: {}",
                        found.len(),
                        found
                            .iter()
                            .map(Tabloid::to_string)
                            .collect::<Vec<_>>()
                            .join(" ")
                    ),
                );
            }
            Err(e) => report.push(
                format!("odd-max-part-solutions-n{n}"),
                false,
                format!("error: {e}"),
            ),
        }
    }
    for n in (4..=max_n).filter(|n| n % 2 == 0) {
        match partitions::kernel_enumerate(n, 2, n / 2) {
            Ok(found) => {
                let pairs_only: Vec<Tabloid> = found
                    .into_iter()
                    .filter(|t| t.shape().iter().all(|&s| s == 2))
                    .collect();
                let expected = vec![partitions::pairing_tabloid(n).unwrap()];
                report.push(
                    format!("even-pair-type-solutions-n{n}"),
                    pairs_only == expected,
                    format!(
                        "pair-type solutions: {}",
                        pairs_only
                            .iter()
                            .map(Tabloid::to_string)
                            .collect::<Vec<_>>()
                            .join(" ")
                    ),
                );
            }
            Err(e) => report.push(
                format!("even-pair-type-solutions-n{n}"),
                false,
                format!("error: {e}"),
            ),
        }
    }

    report
}
