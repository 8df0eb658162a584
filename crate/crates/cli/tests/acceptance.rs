//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line with the instance counts and elapsed time.
//!
//! The conjecture-scan criterion asserts that the exhaustive pair scans
//! report zero violations up to length 10.  The scans *do* find
//! counterexamples at lengths 8 and 9 (confirmed independently by the
//! letter recursion, the factor formula, the definitional oracle and the
//! tabloid action), so that single test fails loudly by design and prints
//! the offending pairs; every other criterion passes.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use freelie::lie;
use freelie::ncpoly::{NcPoly, Ring};
use freelie::partitions::{self, Tabloid};
use freelie::pascal;
use freelie::symgroup;
use freelie::words::{self, Alphabet, Word};
use freelie_cli::{golden, verify};

fn report(criterion: &str, started: Instant, detail: &str) {
    println!(
        "ACCEPTANCE {criterion}: PASS ({detail}; {:.2}s)",
        started.elapsed().as_secs_f64()
    );
}

fn w(text: &str) -> Word {
    Alphabet::latin(4).parse_word(text).unwrap()
}

#[test]
fn criterion_01_appendix_reproduction() {
    let started = Instant::now();
    let golden_rows = golden::appendix_m2();
    let mut rows = 0usize;
    for n in 3..=10usize {
        let computed = pascal::kernel_subsets(n, 2).unwrap();
        let golden_for_n: Vec<(usize, Vec<u64>)> = golden_rows
            .iter()
            .filter(|((gn, _), _)| *gn == n)
            .map(|((_, s), v)| (*s, v.clone()))
            .collect();
        let computed_vec: Vec<(usize, Vec<u64>)> = computed.into_iter().collect();
        assert_eq!(
            computed_vec, golden_for_n,
            "kernel table mismatch at n={n}"
        );
        rows += golden_for_n.iter().map(|(_, v)| v.len()).sum::<usize>();
    }
    assert_eq!(rows, 174);
    assert!(
        started.elapsed().as_secs_f64() < 10.0,
        "appendix reproduction exceeded 10 s"
    );
    report("1 appendix-reproduction", started, "174 subsets, 8 tables");
}

#[test]
fn criterion_02_worked_examples() {
    let started = Instant::now();
    let p6 = pascal::p(6, pascal::parse_subset("2,3,5").unwrap()).unwrap();
    assert_eq!(p6.to_string(), "6*x3*x4 + 2*x3*x5 + 2*x4*x5");
    let p3 = pascal::p(3, pascal::parse_subset("1,2").unwrap()).unwrap();
    assert_eq!(p3.to_string(), "-x3");
    let p4 = pascal::p(4, pascal::parse_subset("1,3").unwrap()).unwrap();
    assert_eq!(p4.to_string(), "2*x3 + 2*x4");
    assert!(pascal::p(4, pascal::parse_subset("2,3").unwrap())
        .unwrap()
        .is_zero());
    report("2 worked-examples", started, "4 printed values");
}

#[test]
fn criterion_03_integer_kernel_characterization() {
    let started = Instant::now();
    let mut checked = 0usize;
    for n in 1..=10 {
        for word in words::all_words(2, n) {
            let vanishes = lie::adjoint(&word, Ring::Int).is_zero();
            assert_eq!(
                vanishes,
                word.is_power() || word.is_even_palindrome(),
                "kernel characterization failed on {word}"
            );
            checked += 1;
        }
    }
    for n in 1..=7 {
        for word in words::all_words(3, n) {
            let vanishes = lie::adjoint(&word, Ring::Int).is_zero();
            assert_eq!(
                vanishes,
                word.is_power() || word.is_even_palindrome(),
                "kernel characterization failed on {word}"
            );
            checked += 1;
        }
    }
    assert!(
        started.elapsed().as_secs_f64() < 60.0,
        "kernel characterization exceeded 60 s"
    );
    report(
        "3 integer-kernel-characterization",
        started,
        &format!("{checked} words, zero exceptions"),
    );
}

#[test]
fn criterion_04_single_letter_block_words() {
    let started = Instant::now();
    let mut checked = 0usize;
    for k in 0..=12usize {
        for l in 0..=(12 - k) {
            if k + l == 0 {
                continue;
            }
            let mut letters = vec![0u8; k];
            letters.push(1);
            letters.extend(std::iter::repeat_n(0, l));
            let word = Word::new(letters);
            let c = binomial(BigInt::from(k + l), BigInt::from(k));
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let mut b_first = vec![1u8];
            b_first.extend(std::iter::repeat_n(0, k + l));
            let mut a_b = vec![0u8, 1];
            a_b.extend(std::iter::repeat_n(0, k + l - 1));
            let expected = NcPoly::monomial(Word::new(b_first), &c * sign, Ring::Int)
                .add(&NcPoly::monomial(Word::new(a_b), &c * (-sign), Ring::Int))
                .unwrap();
            assert_eq!(
                lie::adjoint(&word, Ring::Int),
                expected,
                "closed form failed at k={k} l={l}"
            );
            for m in [2u64, 3, 4, 6, 12] {
                assert_eq!(
                    pascal::power_word_in_support(k as u64, l as u64, m).unwrap(),
                    lie::in_support(&word, m).unwrap(),
                    "carry criterion failed at k={k} l={l} m={m}"
                );
            }
            checked += 1;
        }
    }
    report(
        "4 single-letter-block-words",
        started,
        &format!("{checked} (k,l) pairs, 5 moduli"),
    );
}

#[test]
fn criterion_05_three_way_adjoint_agreement() {
    let started = Instant::now();
    let mut checked = 0usize;
    for n in 1..=8 {
        for word in words::all_words(2, n) {
            let reference = lie::adjoint(&word, Ring::Int);
            for r in 1..=n {
                assert_eq!(
                    lie::adjoint_via_factors(&word, r, Ring::Int).unwrap(),
                    reference,
                    "factor formula failed on {word} at r={r}"
                );
            }
            assert_eq!(
                lie::adjoint_oracle(&word, 2, Ring::Int).unwrap(),
                reference,
                "oracle disagreed on {word}"
            );
            checked += 1;
        }
    }
    // three letters: exhaustive short words plus fixed longer samples
    let mut three: Vec<Word> = Vec::new();
    for n in 1..=5 {
        three.extend(words::all_words(3, n));
    }
    for text in ["abcacb", "cabbac", "abccba", "aabcbcc", "cbacbab"] {
        three.push(w(text));
    }
    for word in three {
        let reference = lie::adjoint(&word, Ring::Int);
        for r in 1..=word.len() {
            assert_eq!(
                lie::adjoint_via_factors(&word, r, Ring::Int).unwrap(),
                reference,
                "factor formula failed on {word} at r={r}"
            );
        }
        assert_eq!(
            lie::adjoint_oracle(&word, 3, Ring::Int).unwrap(),
            reference,
            "oracle disagreed on {word}"
        );
        checked += 1;
    }
    report(
        "5 three-way-adjoint-agreement",
        started,
        &format!("{checked} words, every factor length"),
    );
}

#[test]
fn criterion_06_group_ring_identities() {
    let started = Instant::now();
    for n in 1..=12 {
        let product = symgroup::l_n(n, Ring::Int);
        assert_eq!(
            product,
            symgroup::l_n_via_descents(n, Ring::Int),
            "product and descent formulas differ at n={n}"
        );
        assert_eq!(product.support_size(), 1 << (n - 1));
    }
    for n in 1..=8 {
        let a = symgroup::l_n(n, Ring::Int);
        let b = symgroup::l_n_star(n, Ring::Int);
        assert_eq!(b, symgroup::l_n_star_via_transpose(n, Ring::Int));
        for (p, c) in b.terms() {
            assert_eq!(*c, a.coeff(&p.inverse()), "transpose failed at n={n}");
        }
    }
    for n in 1..=9usize {
        let word = Word::new((0..n as u8).collect());
        assert_eq!(
            symgroup::act_on_word(&word, &symgroup::l_n(n, Ring::Int)).unwrap(),
            lie::bracketing(&word, Ring::Int),
            "place action failed at n={n}"
        );
    }
    let mut checked = 0usize;
    for n in 2..=9usize {
        let ln = symgroup::l_n(n, Ring::Int);
        let star = symgroup::l_n_star(n, Ring::Int);
        for word in words::all_words(2, n) {
            if word.alph_size() < 2 {
                continue;
            }
            let t = partitions::word_to_tabloid(&word, 2).unwrap();
            let lhs = partitions::act(&ln, &t).unwrap();
            let rhs = symgroup::act_on_word(&word, &star).unwrap();
            assert_eq!(lhs.is_zero(), rhs.is_zero());
            for (u, c) in rhs.terms() {
                assert_eq!(
                    lhs.coeff(&partitions::word_to_tabloid(u, 2).unwrap()),
                    *c,
                    "action equivalence failed on {word}"
                );
            }
            checked += 1;
        }
    }
    report(
        "6 group-ring-identities",
        started,
        &format!("n up to 12; {checked} words through the tabloid action"),
    );
}

#[test]
fn criterion_07_gcd_invariant_triple_equality() {
    let started = Instant::now();
    let mut checked = 0usize;
    for n in 1..=8 {
        for word in words::all_words(2, n) {
            let c = lie::coefficient_gcd(&word);
            let coords = lie::lyndon_coordinates(&word, 2).unwrap();
            assert_eq!(coords.content(), c, "coordinate gcd mismatch on {word}");
            match lie::witness_polynomial(&word) {
                Ok(q) => {
                    let value = q
                        .scalar_product(&NcPoly::word(word.clone(), Ring::Int))
                        .unwrap();
                    assert_eq!(value, c, "witness value mismatch on {word}");
                }
                Err(_) => assert!(c.is_zero(), "missing witness on {word}"),
            }
            checked += 1;
        }
    }
    report(
        "7 gcd-invariant-triple-equality",
        started,
        &format!("{checked} words"),
    );
}

#[test]
fn criterion_08_tabloid_ground_truth() {
    let started = Instant::now();
    let five = partitions::kernel_enumerate(5, 2, 3).unwrap();
    assert_eq!(
        five,
        vec![
            Tabloid::parse("1,3,5/2/4").unwrap(),
            Tabloid::parse("1,5/2,4/3").unwrap(),
        ]
    );
    let six = partitions::kernel_enumerate(6, 2, 3).unwrap();
    for text in ["1,3,5/2,6/4", "1,3,6/2,5/4", "1,4,6/2,5/3", "2,4,6/1,5/3"] {
        let expected = Tabloid::parse(text).unwrap().canonical();
        assert!(six.contains(&expected), "n=6 solution {text} missing");
    }
    let seven = partitions::kernel_enumerate(7, 2, 3).unwrap();
    let special = Tabloid::parse("1,3,6/2,5,7/4").unwrap();
    assert!(seven.contains(&special));
    for four_part in partitions::kernel_enumerate(7, 2, 4).unwrap() {
        assert!(
            !four_part.refines(&special).unwrap(),
            "{four_part} refines the special solution"
        );
    }
    report(
        "8 tabloid-ground-truth",
        started,
        "n=5 exact, n=6 superset, n=7 unrefinable solution",
    );
}

#[test]
fn criterion_09_three_letter_kernel_word_preimages() {
    let started = Instant::now();
    // the length-7 word on three letters annihilated mod 2
    let word = Word::new(vec![0, 1, 0, 2, 1, 0, 1]);
    assert!(lie::adjoint(&word, Ring::Mod(2)).is_zero());
    let mut preimages = 0usize;
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
        // every preimage of the word using all four letters
        let choices: Vec<Vec<u8>> = word
            .letters()
            .iter()
            .map(|&target| (0..4u8).filter(|&a| map[a as usize] == target).collect())
            .collect();
        let mut counters = vec![0usize; word.len()];
        loop {
            let candidate: Vec<u8> = counters
                .iter()
                .zip(&choices)
                .map(|(&i, options)| options[i])
                .collect();
            let u = Word::new(candidate);
            if u.alph_size() == 4 {
                assert!(
                    !lie::adjoint(&u, Ring::Mod(2)).is_zero(),
                    "preimage {u} unexpectedly in the kernel"
                );
                preimages += 1;
            }
            let mut pos = word.len();
            let mut done = true;
            while pos > 0 {
                pos -= 1;
                if counters[pos] + 1 < choices[pos].len() {
                    counters[pos] += 1;
                    for slot in counters.iter_mut().skip(pos + 1) {
                        *slot = 0;
                    }
                    done = false;
                    break;
                }
            }
            if done {
                break;
            }
        }
    }
    assert!(preimages > 0);
    report(
        "9 three-letter-kernel-word-preimages",
        started,
        &format!("{preimages} full-alphabet preimages all outside the kernel"),
    );
}

#[test]
fn criterion_10a_invariant_suites() {
    let started = Instant::now();

    // adjoint reversal sign
    for n in 1..=9 {
        for word in words::all_words(2, n) {
            let p = lie::adjoint(&word, Ring::Int);
            let expected = if n % 2 == 1 { p.clone() } else { p.neg() };
            assert_eq!(lie::adjoint(&word.reversed(), Ring::Int), expected);
        }
    }

    // subset reversal sign
    for n in 2..=10usize {
        let full = (1u64 << n) - 1;
        for mask in 1..=full {
            let direct = pascal::p(n, mask).unwrap();
            let mirrored = pascal::p(n, pascal::tau_subset(n, mask)).unwrap();
            let expected = if n % 2 == 1 { direct.clone() } else { direct.neg() };
            assert_eq!(mirrored, expected);
            if n % 2 == 0 && pascal::tau_subset(n, mask) == mask {
                assert!(direct.is_zero());
            }
        }
    }

    // telescoping shuffle identity
    for n in 1..=10 {
        for word in words::all_words(2, n) {
            let mut total = NcPoly::zero(Ring::Int);
            for cut in 0..=word.len() {
                let s = word.factor(0, cut).reversed();
                let t = word.factor(cut, word.len());
                let term = NcPoly::word(s, Ring::Int)
                    .shuffle(&NcPoly::word(t, Ring::Int))
                    .unwrap();
                total = total
                    .add(&if cut % 2 == 0 { term } else { term.neg() })
                    .unwrap();
            }
            assert!(total.is_zero(), "telescoping failed on {word}");
        }
    }

    // row sums divide over every enumerated kernel subset
    for m in [2u64, 3, 4] {
        for n in 2..=10usize {
            for (_, masks) in pascal::kernel_subsets(n, m).unwrap() {
                for mask in masks {
                    let nn = pascal::n_invariant(n, mask).unwrap();
                    assert!((nn % BigInt::from(m)).is_zero());
                }
            }
        }
    }

    // alphabet bound over all four rings
    for m in [0u64, 2, 3, 4] {
        let ring = Ring::from_flag(m).unwrap();
        for (r, cap) in [(2usize, 8usize), (3, 7), (4, 6)] {
            for n in 1..=cap {
                for word in words::all_words(r, n) {
                    if lie::adjoint(&word, ring).is_zero() {
                        assert!(
                            word.alph_size() <= word.len().div_ceil(2),
                            "alphabet bound failed on {word} mod {m}"
                        );
                    }
                }
            }
        }
    }

    // closed-form integer tabloid kernel vs the direct action
    for n in 2..=8usize {
        let ln = symgroup::l_n(n, Ring::Int);
        for r in 1..=n {
            for t in partitions::enumerate(n, r).unwrap() {
                assert_eq!(
                    partitions::act(&ln, &t).unwrap().is_zero(),
                    partitions::kernel_characterize_int(&t),
                    "closed form disagreed on {t}"
                );
            }
        }
    }

    // the named row-sum instances
    assert_eq!(
        pascal::n_invariant(9, pascal::parse_subset("3,4,7").unwrap()).unwrap(),
        BigInt::zero()
    );
    assert!(!pascal::p(9, pascal::parse_subset("3,4,7").unwrap())
        .unwrap()
        .is_zero());
    let i = pascal::parse_subset("2,3,4,7").unwrap();
    let j = pascal::parse_subset("3,4,7,8").unwrap();
    assert_eq!(pascal::n_invariant(9, i).unwrap(), BigInt::from(-8));
    assert_eq!(pascal::n_invariant(9, j).unwrap(), BigInt::from(-8));
    assert_ne!(pascal::p(9, i).unwrap(), pascal::p(9, j).unwrap());

    report(
        "10a invariant-suites",
        started,
        "reversal signs, telescoping identity, row sums, alphabet bound, closed form",
    );
}

#[test]
fn criterion_10b_conjecture_scans_report_zero_violations() {
    let started = Instant::now();
    let mut all_violations: Vec<String> = Vec::new();
    for n in 2..=10 {
        let r = lie::scan_twin_pairs(n, 2).unwrap();
        all_violations.extend(r.violations.iter().map(|v| format!("words n={n}: {v}")));
        for s in 1..=(n / 2) {
            let r = partitions::scan_tabloid_pairs(n, &[n - s, s]).unwrap();
            all_violations.extend(r.violations.iter().map(|v| format!("tabloids n={n}: {v}")));
        }
        let r = pascal::scan_pascal_pairs(n).unwrap();
        all_violations.extend(r.violations.iter().map(|v| format!("subsets n={n}: {v}")));
    }
    if !all_violations.is_empty() {
        eprintln!("ACCEPTANCE 10b conjecture-scans: FAIL — the exhaustive scans found");
        eprintln!("counterexamples to the reversal characterization of twin and");
        eprintln!("anti-twin pairs.  These are verified findings, not implementation");
        eprintln!("errors: the letter recursion, the fixed-length factor formula, the");
        eprintln!("definitional oracle and the tabloid action all agree on them, and");
        eprintln!("the same pipeline reproduces the reference kernel tables exactly.");
        for v in &all_violations {
            eprintln!("  {v}");
        }
    }
    assert!(
        all_violations.is_empty(),
        "{} scan violations found (see stderr)",
        all_violations.len()
    );
    report("10b conjecture-scans", started, "0 violations");
}

#[test]
fn criterion_10c_structured_kernel_families() {
    let started = Instant::now();
    // odd lengths: palindrome and hook tabloids solve mod 2 and are the
    // only solutions with the maximal number of parts
    for n in [5usize, 7, 9] {
        let r = n.div_ceil(2);
        let mut found = partitions::kernel_enumerate(n, 2, r).unwrap();
        found.sort_unstable();
        let mut expected = vec![
            partitions::odd_palindrome_tabloid(n).unwrap(),
            partitions::hook_tabloid(n).unwrap(),
        ];
        expected.sort_unstable();
        assert_eq!(found, expected, "maximal-part solutions at n={n}");
    }
    // the six-element pair-type uniqueness holds
    let pair_type: Vec<Tabloid> = partitions::kernel_enumerate(6, 2, 3)
        .unwrap()
        .into_iter()
        .filter(|t| t.shape() == vec![2, 2, 2])
        .collect();
    assert_eq!(pair_type, vec![partitions::pairing_tabloid(6).unwrap()]);
    report(
        "10c structured-kernel-families",
        started,
        "odd palindrome/hook families, n=6 pair-type uniqueness",
    );
}

#[test]
fn verify_suites_match_acceptance() {
    // the CLI-facing suites agree with the direct checks above: appendix
    // and identities pass in full, the conjecture scans report exactly the
    // length-8 and length-9 coincidences
    let started = Instant::now();
    let appendix = verify::run_appendix();
    assert!(appendix.passed(), "appendix suite failed");
    let identities = verify::run_identities(10);
    assert!(
        identities.passed(),
        "identities suite failed: {:?}",
        identities.failures()
    );
    let conjectures = verify::run_conjectures(10);
    let failing: Vec<&str> = conjectures
        .failures()
        .iter()
        .map(|c| c.name.as_str())
        .collect();
    assert_eq!(
        failing,
        vec![
            "twin-word-scan-n8",
            "twin-word-scan-n9",
            "tabloid-scan-n8",
            "tabloid-scan-n9",
            "pascal-scan-n8",
            "pascal-scan-n9",
            "even-pair-type-solutions-n4",
        ],
        "unexpected conjecture-suite outcome"
    );
    report(
        "verify-suite-consistency",
        started,
        "appendix and identities pass; scans flag exactly the known coincidences",
    );
}
