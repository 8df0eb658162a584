//! The left normed Lie bracketing `l`, its adjoint `l*` (three independent
//! algorithms), the gcd invariant `c(w)`, Lyndon coordinates and the
//! support / twin / anti-twin decision procedures.
//!
//! A word `w` lies in the support of the free Lie algebra exactly when
//! `l*(w)` is nonzero over the coefficient ring; over the integers the gcd
//! `c(w)` of the coefficients of `l*(w)` is the least positive coefficient
//! of `w` over all Lie polynomials, and reduction mod m answers the same
//! question over the integers mod m.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ncpoly::{NcPoly, Ring};
use crate::words::{self, Word};

/// Left normed Lie bracketing: `l(ε) = 0`, `l(a) = a`,
/// `l(ua) = l(u)a - a·l(u)`.
pub fn bracketing(w: &Word, ring: Ring) -> NcPoly {
    let letters = w.letters();
    if letters.is_empty() {
        return NcPoly::zero(ring);
    }
    let mut acc = NcPoly::letter(letters[0], ring);
    for &a in &letters[1..] {
        acc = acc
            .append_letter(a)
            .sub(&acc.prepend_letter(a))
            .expect("same ring");
    }
    acc
}

/// Adjoint of the bracketing by the two-sided letter recursion
/// `l*(aub) = l*(au)b - l*(ub)a`, evaluated bottom-up over all factors of
/// `w` so each factor is computed once.
pub fn adjoint(w: &Word, ring: Ring) -> NcPoly {
    let n = w.len();
    let letters = w.letters();
    if n == 0 {
        return NcPoly::zero(ring);
    }
    let mut row: Vec<NcPoly> = letters
        .iter()
        .map(|&a| NcPoly::letter(a, ring))
        .collect();
    for len in 2..=n {
        let mut next = Vec::with_capacity(n - len + 1);
        for i in 0..=(n - len) {
            let first = letters[i];
            let last = letters[i + len - 1];
            let p = row[i]
                .append_letter(last)
                .sub(&row[i + 1].append_letter(first))
                .expect("same ring");
            next.push(p);
        }
        row = next;
    }
    row.into_iter().next().unwrap()
}

/// Adjoint via all factors of a fixed length `r`:
/// `l*(w) = Σ_{w=sut, |u|=r} l*(u)·(-1)^{|s|}·(reverse(s) ⧢ t)`.
///
/// Valid for `1 <= r <= |w|`; the degenerate factor length `r = 0` is
/// rejected (the corresponding sum telescopes to zero, not to `l*`).
pub fn adjoint_via_factors(w: &Word, r: usize, ring: Ring) -> Result<NcPoly> {
    let n = w.len();
    if r < 1 || r > n {
        return Err(Error::FactorLengthOutOfRange { r, n });
    }
    let mut total = NcPoly::zero(ring);
    for i in 0..=(n - r) {
        let factor = w.factor(i, i + r);
        let prefix_rev = w.factor(0, i).reversed();
        let suffix = w.factor(i + r, n);
        let sh = NcPoly::word(prefix_rev, ring).shuffle(&NcPoly::word(suffix, ring))?;
        let mut term = adjoint(&factor, ring).concat(&sh)?;
        if i % 2 == 1 {
            term = term.neg();
        }
        total = total.add(&term)?;
    }
    Ok(total)
}

fn oracle_budget(r: usize, n: usize) -> bool {
    match r {
        0 | 1 => n <= 16,
        2 => n <= 10,
        3 => n <= 7,
        _ => n <= 5,
    }
}

/// Definitional brute force `l*(w) = Σ_{u ∈ A^n} (l(u), w)·u` over an
/// alphabet of `r` letters.  Exponential; guarded, and retained only as an
/// independent cross-check of [`adjoint`].
pub fn adjoint_oracle(w: &Word, r: usize, ring: Ring) -> Result<NcPoly> {
    let n = w.len();
    if let Some(max) = w.max_letter() {
        if max as usize >= r {
            return Err(Error::LetterOutOfRange {
                letter: max as usize,
                bound: r,
            });
        }
    }
    if !oracle_budget(r, n) {
        return Err(Error::BudgetExceeded(format!(
            "oracle over {r} letters is limited to short words; got length {n}"
        )));
    }
    let mut total = NcPoly::zero(ring);
    if n == 0 {
        return Ok(total);
    }
    let target = NcPoly::word(w.clone(), ring);
    for u in words::all_words(r, n) {
        let c = bracketing(&u, ring).scalar_product(&target)?;
        if !c.is_zero() {
            total = total.add(&NcPoly::monomial(u, c, ring))?;
        }
    }
    Ok(total)
}

/// The gcd of the coefficients of `l*(w)` over the integers (zero when
/// `l*(w) = 0`): the least positive coefficient of `w` over all Lie
/// polynomials.
pub fn coefficient_gcd(w: &Word) -> BigInt {
    adjoint(w, Ring::Int).content()
}

/// The Lyndon basis element of a Lyndon word: recursive bracketing along
/// right standard factorizations.  Equals the word itself plus a
/// combination of lexicographically greater words of the same length.
pub fn lyndon_basis_element(w: &Word) -> Result<NcPoly> {
    if !words::is_lyndon(w) {
        return Err(Error::NotLyndon);
    }
    let p = lyndon_bracket(w);
    debug_assert!(p.coeff(w).is_one());
    Ok(p)
}

fn lyndon_bracket(w: &Word) -> NcPoly {
    if w.len() == 1 {
        return NcPoly::letter(w.letters()[0], Ring::Int);
    }
    let (u, v) = words::standard_factorization(w).expect("Lyndon word of length >= 2");
    let pu = lyndon_bracket(&u);
    let pv = lyndon_bracket(&v);
    pu.concat(&pv)
        .and_then(|left| left.sub(&pv.concat(&pu)?))
        .expect("same ring")
}

/// Coordinates of `l*(w)` in the basis `{l*(l_i)}` indexed by the Lyndon
/// words of length `|w|` over `r` letters, solved by back-substitution on
/// the unitriangular system over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonCoordinates {
    pub words: Vec<Word>,
    pub coords: Vec<BigInt>,
}

impl LyndonCoordinates {
    /// Gcd of the coordinates, nonnegative; equals `c(w)` when `l*(w)` is
    /// nonzero.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coords {
            g = g.gcd(c);
        }
        g
    }
}

pub fn lyndon_coordinates(w: &Word, r: usize) -> Result<LyndonCoordinates> {
    if let Some(max) = w.max_letter() {
        if max as usize >= r {
            return Err(Error::LetterOutOfRange {
                letter: max as usize,
                bound: r,
            });
        }
    }
    let n = w.len();
    if n == 0 {
        return Ok(LyndonCoordinates {
            words: Vec::new(),
            coords: Vec::new(),
        });
    }
    let lyndon = words::lyndon_words(r, n);
    let basis: Vec<NcPoly> = lyndon
        .iter()
        .map(|l| lyndon_basis_element(l).expect("generated words are Lyndon"))
        .collect();
    let target = NcPoly::word(w.clone(), Ring::Int);
    let k = lyndon.len();
    let mut coords = vec![BigInt::zero(); k];
    for i in (0..k).rev() {
        let mut value = basis[i].scalar_product(&target)?;
        for j in (i + 1)..k {
            if !coords[j].is_zero() {
                value -= basis[i].coeff(&lyndon[j]) * &coords[j];
            }
        }
        coords[i] = value;
    }
    Ok(LyndonCoordinates {
        words: lyndon,
        coords,
    })
}

/// A Lie polynomial `Q` with `(Q, w) = c(w)`, built from a Bezout
/// combination over the coefficients of `l*(w)` processed in canonical term
/// order.  Fails when `l*(w) = 0` (then `c(w) = 0` and no witness exists).
pub fn witness_polynomial(w: &Word) -> Result<NcPoly> {
    let image = adjoint(w, Ring::Int);
    if image.is_zero() {
        return Err(Error::ZeroAdjoint);
    }
    let terms: Vec<(Word, BigInt)> = image.terms().map(|(u, c)| (u.clone(), c.clone())).collect();
    let mut g = terms[0].1.clone();
    let mut multipliers = vec![BigInt::one()];
    if g.is_negative() {
        g = -g;
        multipliers[0] = -BigInt::one();
    }
    for (_, d) in &terms[1..] {
        let eg = g.extended_gcd(d);
        for k in &mut multipliers {
            *k *= &eg.x;
        }
        multipliers.push(eg.y.clone());
        g = eg.gcd;
        if g.is_negative() {
            g = -g;
            for k in &mut multipliers {
                *k = -k.clone();
            }
        }
    }
    let mut witness = NcPoly::zero(Ring::Int);
    for ((u, _), k) in terms.iter().zip(&multipliers) {
        if !k.is_zero() {
            witness = witness.add(&bracketing(u, Ring::Int).scale(k))?;
        }
    }
    debug_assert_eq!(
        witness
            .scalar_product(&NcPoly::word(w.clone(), Ring::Int))
            .expect("same ring"),
        g
    );
    Ok(witness)
}

/// Does `w` appear with nonzero coefficient in some Lie polynomial over the
/// ring selected by `m` (0 = integers, m >= 2 = integers mod m)?
pub fn in_support(w: &Word, m: u64) -> Result<bool> {
    match Ring::from_flag(m)? {
        Ring::Int => Ok(!adjoint(w, Ring::Int).is_zero()),
        Ring::Mod(m) => {
            let c = coefficient_gcd(w);
            Ok(!(c % BigInt::from(m)).is_zero())
        }
    }
}

/// Twin / anti-twin classification of a pair of words of common length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinClass {
    /// Equal coefficients in every Lie polynomial.
    Twin,
    /// Opposite coefficients in every Lie polynomial.
    AntiTwin,
    /// Both at once (both words outside the support, or mod 2).
    Both,
    Neither,
}

impl fmt::Display for TwinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TwinClass::Twin => "twin",
            TwinClass::AntiTwin => "anti-twin",
            TwinClass::Both => "both",
            TwinClass::Neither => "neither",
        };
        write!(f, "{s}")
    }
}

pub fn twin_relation(u: &Word, v: &Word, m: u64) -> Result<TwinClass> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let ring = Ring::from_flag(m)?;
    let pu = adjoint(u, Ring::Int);
    let pv = adjoint(v, Ring::Int);
    let diff = pu.sub(&pv)?;
    let sum = pu.add(&pv)?;
    let (twin, anti) = match ring {
        Ring::Int => (diff.is_zero(), sum.is_zero()),
        Ring::Mod(m) => (diff.is_zero_mod(m), sum.is_zero_mod(m)),
    };
    Ok(match (twin, anti) {
        (true, true) => TwinClass::Both,
        (true, false) => TwinClass::Twin,
        (false, true) => TwinClass::AntiTwin,
        (false, false) => TwinClass::Neither,
    })
}

/// Result of the exhaustive twin/anti-twin scan over all words of a given
/// length: every pair in the support is classified, and each pair whose
/// classification differs from the reversal characterization (twins are
/// `u = v` or odd-length reversal pairs, anti-twins even-length reversal
/// pairs) is flagged.
#[derive(Debug, Clone)]
pub struct TwinScanReport {
    pub n: usize,
    pub alphabet_size: usize,
    pub support_count: usize,
    pub twin_pairs: Vec<(Word, Word)>,
    pub anti_twin_pairs: Vec<(Word, Word)>,
    pub violations: Vec<String>,
}

pub fn scan_twin_pairs(n: usize, r: usize) -> Result<TwinScanReport> {
    let total = (r as u64).checked_pow(n as u32);
    match total {
        Some(t) if t <= 1 << 14 => {}
        _ => {
            return Err(Error::BudgetExceeded(format!(
                "twin scan over {r}^{n} words"
            )))
        }
    }
    let all = words::all_words(r, n);
    let mut keys: Vec<Option<Vec<(Word, BigInt)>>> = Vec::with_capacity(all.len());
    for w in &all {
        let p = adjoint(w, Ring::Int);
        if p.is_zero() {
            keys.push(None);
        } else {
            keys.push(Some(p.terms().map(|(u, c)| (u.clone(), c.clone())).collect()));
        }
    }
    let mut buckets: HashMap<&Vec<(Word, BigInt)>, Vec<usize>> = HashMap::new();
    for (i, key) in keys.iter().enumerate() {
        if let Some(k) = key {
            buckets.entry(k).or_default().push(i);
        }
    }
    let support_count = buckets.values().map(Vec::len).sum();

    let mut twin_pairs = Vec::new();
    for bucket in buckets.values() {
        for (a, &i) in bucket.iter().enumerate() {
            for &j in &bucket[a + 1..] {
                twin_pairs.push((i, j));
            }
        }
    }
    let mut anti_twin_pairs = Vec::new();
    for (i, key) in keys.iter().enumerate() {
        if let Some(k) = key {
            let negated: Vec<(Word, BigInt)> =
                k.iter().map(|(u, c)| (u.clone(), -c.clone())).collect();
            if let Some(bucket) = buckets.get(&negated) {
                for &j in bucket {
                    if j > i {
                        anti_twin_pairs.push((i, j));
                    }
                }
            }
        }
    }
    twin_pairs.sort_unstable();
    anti_twin_pairs.sort_unstable();

    // reversal characterization, restricted to the support
    let mut predicted_twins = Vec::new();
    let mut predicted_anti = Vec::new();
    for (i, w) in all.iter().enumerate() {
        if keys[i].is_none() {
            continue;
        }
        let rev = w.reversed();
        if rev == *w {
            continue;
        }
        if let Some(j) = all.iter().position(|u| *u == rev) {
            if j > i && keys[j].is_some() {
                if n % 2 == 1 {
                    predicted_twins.push((i, j));
                } else {
                    predicted_anti.push((i, j));
                }
            }
        }
    }
    predicted_twins.sort_unstable();
    predicted_anti.sort_unstable();

    let mut violations = Vec::new();
    let describe = |pairs: &[(usize, usize)], observed: bool, kind: &str| {
        pairs
            .iter()
            .map(|&(i, j)| {
                let tag = if observed { "unexpected" } else { "missing" };
                format!("{tag} {kind} pair ({}, {})", all[i], all[j])
            })
            .collect::<Vec<_>>()
    };
    let diff = |left: &[(usize, usize)], right: &[(usize, usize)]| {
        left.iter()
            .filter(|p| !right.contains(p))
            .copied()
            .collect::<Vec<_>>()
    };
    violations.extend(describe(&diff(&twin_pairs, &predicted_twins), true, "twin"));
    violations.extend(describe(
        &diff(&predicted_twins, &twin_pairs),
        false,
        "twin",
    ));
    violations.extend(describe(
        &diff(&anti_twin_pairs, &predicted_anti),
        true,
        "anti-twin",
    ));
    violations.extend(describe(
        &diff(&predicted_anti, &anti_twin_pairs),
        false,
        "anti-twin",
    ));

    let to_words =
        |pairs: Vec<(usize, usize)>| -> Vec<(Word, Word)> {
            pairs
                .into_iter()
                .map(|(i, j)| (all[i].clone(), all[j].clone()))
                .collect()
        };
    Ok(TwinScanReport {
        n,
        alphabet_size: r,
        support_count,
        twin_pairs: to_words(twin_pairs),
        anti_twin_pairs: to_words(anti_twin_pairs),
        violations,
    })
}
