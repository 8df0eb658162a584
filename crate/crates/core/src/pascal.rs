//! Two-letter specialization: Pascal descent polynomials.
//!
//! A word of length `n` in two letters is recorded by the subset `I ⊆ [n]`
//! of positions of its second letter.  The image of the corresponding
//! 2-block tabloid under the bracketing element, read as a multilinear
//! polynomial in commuting variables, is `h_n(I)`; it is divisible by
//! `x_1 - x_2` and the quotient `p_n(I)` generalizes the signed binomial
//! coefficient (`p_n({i}) = (-1)^{i-1} C(n-1, i-1)`).  The word lies in the
//! support mod m exactly when `p_n(I) !≡ 0 (mod m)`, which drives the
//! kernel tables, and the signed row sum `N_n(I)` gives a cheap necessary
//! condition.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Parse a subset in the textual form `2,3,5` into a bitmask (bit `i-1`
/// set for element `i`).
pub fn parse_subset(text: &str) -> Result<u64> {
    let mut mask = 0u64;
    for item in text.split(',') {
        let v: usize = item
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad subset element {item:?}")))?;
        if !(1..=64).contains(&v) {
            return Err(Error::Parse(format!("element {v} out of range 1..=64")));
        }
        mask |= 1u64 << (v - 1);
    }
    Ok(mask)
}

pub fn format_subset(mask: u64) -> String {
    subset_elements(mask)
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// 1-based elements of a subset mask, ascending.
pub fn subset_elements(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize + 1);
        rest &= rest - 1;
    }
    out
}

/// Image of a subset of `[n]` under the order reversing involution
/// `i ↦ n - i + 1`.
pub fn tau_subset(n: usize, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1u64 << (n - 1 - i);
    }
    out
}

/// Compare subsets as ascending element tuples (the order the kernel
/// tables are listed in).
pub fn cmp_subsets(a: u64, b: u64) -> Ordering {
    let d = a ^ b;
    if d == 0 {
        return Ordering::Equal;
    }
    let e = d.trailing_zeros();
    if a & (1 << e) != 0 {
        // `a` owns the smallest differing element; `b` is smaller only if
        // it has nothing from that element onwards (proper prefix)
        if b >> e == 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    } else if a >> e == 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Monomial key of a multilinear polynomial: the set of variable indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarSet(pub u64);

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_subsets(self.0, other.0)
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let names: Vec<String> = subset_elements(self.0)
            .into_iter()
            .map(|v| format!("x{v}"))
            .collect();
        write!(f, "{}", names.join("*"))
    }
}

/// Multilinear polynomial with exact integer coefficients: a finite map
/// from variable sets to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<VarSet, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = MPoly::zero();
        p.add_term(VarSet(0), c);
        p
    }

    pub fn monomial(vars: u64, c: BigInt) -> Self {
        let mut p = MPoly::zero();
        p.add_term(VarSet(vars), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VarSet, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, vars: u64) -> BigInt {
        self.terms
            .get(&VarSet(vars))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, vars: VarSet, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(vars) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(*v, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(*v, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (v, c) in &self.terms {
            out.add_term(*v, -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> MPoly {
        let mut out = MPoly::zero();
        for (v, c) in &self.terms {
            out.add_term(*v, c * k);
        }
        out
    }

    /// Multiply by the (disjoint) variable monomial `x_J`.
    pub fn mul_vars(&self, vars: u64) -> MPoly {
        let mut out = MPoly::zero();
        for (v, c) in &self.terms {
            debug_assert_eq!(v.0 & vars, 0, "variables must stay multilinear");
            out.add_term(VarSet(v.0 | vars), c.clone());
        }
        out
    }

    pub fn is_zero_mod(&self, m: u64) -> bool {
        let m = BigInt::from(m);
        self.terms.values().all(|c| (c % &m).is_zero())
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    /// Substitute `x_1 = 1` and every other variable by one parameter `t`;
    /// the result maps degrees of `t` to coefficients.
    pub fn specialize_rest_equal(&self) -> BTreeMap<usize, BigInt> {
        let mut out: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (v, c) in &self.terms {
            let deg = v.0.count_ones() as usize - usize::from(v.0 & 1 != 0);
            let e = out.entry(deg).or_insert_with(BigInt::zero);
            *e += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (v, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if v.0 == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{v}")?;
            } else {
                write!(f, "{magnitude}*{v}")?;
            }
        }
        Ok(())
    }
}

fn check_subset(n: usize, mask: u64) -> Result<()> {
    if n == 0 || n > 64 {
        return Err(Error::SubsetOutOfRange(n));
    }
    if mask == 0 {
        return Err(Error::EmptySubset);
    }
    if mask & !low_mask(n) != 0 {
        return Err(Error::SubsetOutOfRange(n));
    }
    Ok(())
}

/// Image of a subset under the descending cycle: `i ↦ i-1` for `i >= 2`,
/// `1 ↦ n`.
fn cycle_image(n: usize, mask: u64) -> u64 {
    let wrapped = if mask & 1 != 0 { 1u64 << (n - 1) } else { 0 };
    (mask >> 1) | wrapped
}

fn signed_binomial(n: usize, i: usize) -> BigInt {
    let b = binomial(BigInt::from(n - 1), BigInt::from(i - 1));
    if (i - 1).is_multiple_of(2) {
        b
    } else {
        -b
    }
}

type Memo = HashMap<(usize, u64), MPoly>;

fn h_memo(n: usize, mask: u64, memo: &mut Memo) -> MPoly {
    if let Some(hit) = memo.get(&(n, mask)) {
        return hit.clone();
    }
    let over = mask & !low_mask(n);
    let value = if over != 0 {
        // entries beyond the current level factor out as plain variables
        h_memo(n, mask & low_mask(n), memo).mul_vars(over)
    } else if n == 1 {
        MPoly::monomial(mask, BigInt::one())
    } else if mask == 0 {
        MPoly::zero()
    } else if mask.count_ones() == 1 {
        let i = mask.trailing_zeros() as usize + 1;
        let c = signed_binomial(n, i);
        MPoly::monomial(1, c.clone()).sub(&MPoly::monomial(2, c))
    } else {
        h_memo(n - 1, mask, memo).sub(&h_memo(n - 1, cycle_image(n, mask), memo))
    };
    memo.insert((n, mask), value.clone());
    value
}

fn p_memo(n: usize, mask: u64, memo: &mut Memo) -> MPoly {
    if let Some(hit) = memo.get(&(n, mask)) {
        return hit.clone();
    }
    let over = mask & !low_mask(n);
    let value = if over != 0 {
        p_memo(n, mask & low_mask(n), memo).mul_vars(over)
    } else if mask == 0 {
        MPoly::zero()
    } else if mask.count_ones() == 1 {
        let i = mask.trailing_zeros() as usize + 1;
        MPoly::constant(signed_binomial(n, i))
    } else if n == 2 {
        // mask = {1,2}: the square of a letter
        MPoly::zero()
    } else {
        p_memo(n - 1, mask, memo).sub(&p_memo(n - 1, cycle_image(n, mask), memo))
    };
    memo.insert((n, mask), value.clone());
    value
}

/// The multilinear image `h_n(I)` of the 2-block tabloid with second block
/// `I` under the bracketing element, by the level recursion
/// `h_n(I) = h_{n-1}(I) - h_{n-1}(ζ_n I)` with signed binomial base.
pub fn h(n: usize, mask: u64) -> Result<MPoly> {
    check_subset(n, mask)?;
    Ok(h_memo(n, mask, &mut Memo::new()))
}

/// Pascal descent polynomial: the quotient `h_n(I) / (x_1 - x_2)`,
/// multilinear of total degree `|I| - 1`.
pub fn p(n: usize, mask: u64) -> Result<MPoly> {
    check_subset(n, mask)?;
    Ok(p_memo(n, mask, &mut Memo::new()))
}

/// Independent evaluation of `p_n(I)` by the two-sided decomposition over
/// the gap structure of `I`; agrees with [`p`] on every valid input.
pub fn p_decomposition(n: usize, mask: u64) -> Result<MPoly> {
    check_subset(n, mask)?;
    let elements = subset_elements(mask);
    let d = elements.len();
    if d < 2 || mask == low_mask(n) {
        return Err(Error::Parse(
            "decomposition needs a proper subset with at least two elements".into(),
        ));
    }
    let a1 = elements[0];
    let ad = elements[d - 1];
    let k = a1 - 1;
    let l = n - ad;
    let mut memo = Memo::new();

    // differences from the smallest element
    let mut left_set = 0u64;
    for &a in &elements[1..] {
        left_set |= 1u64 << (a - a1 - 1);
    }
    let mut total = MPoly::zero();
    for i in 0..=l {
        let weight = binomial(BigInt::from(k + i), BigInt::from(i));
        let part = p_memo(n - k - 1 - i, left_set, &mut memo)
            .mul_vars(1u64 << (n - k - i - 1))
            .scale(&weight);
        let part = if k.is_multiple_of(2) { part.neg() } else { part };
        total = total.add(&part);
    }
    for j in 0..=k {
        // the first d-1 elements, shifted down by j
        let mut right_set = 0u64;
        for &a in &elements[..d - 1] {
            right_set |= 1u64 << (a - j - 1);
        }
        let weight = binomial(BigInt::from(l + j), BigInt::from(j));
        let part = p_memo(n - l - 1 - j, right_set, &mut memo)
            .mul_vars(1u64 << (n - l - j - 1))
            .scale(&weight);
        let part = if j % 2 == 0 { part } else { part.neg() };
        total = total.add(&part);
    }
    Ok(total)
}

/// The signed partial row sum `N_n(I) = Σ_{i∈I} (-1)^{i-1} C(n-1, i-1)`:
/// the coefficient sum of `p_n(I)`.
pub fn n_invariant(n: usize, mask: u64) -> Result<BigInt> {
    if n == 0 || n > 64 || mask & !low_mask(n) != 0 {
        return Err(Error::SubsetOutOfRange(n));
    }
    let mut total = BigInt::zero();
    for i in subset_elements(mask) {
        total += signed_binomial(n, i);
    }
    Ok(total)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Binomial coefficient mod a prime by the base-p digit product.
pub fn lucas_binom(n: u64, r: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut n = n;
    let mut r = r;
    let mut result = 1u128;
    while n > 0 || r > 0 {
        let (nd, rd) = (n % p, r % p);
        if rd > nd {
            return Ok(0);
        }
        // digit binomial, exact at every step
        let mut digit = 1u128;
        for i in 0..rd as u128 {
            digit = digit * (nd as u128 - i) / (i + 1);
        }
        result = (result * (digit % p as u128)) % p as u128;
        n /= p;
        r /= p;
    }
    Ok(result as u64)
}

/// Number of carries in the base-p addition of `k` and `l`: the p-adic
/// valuation of `C(k+l, k)`.
pub fn kummer_carries(k: u64, l: u64, p: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let (mut k, mut l) = (k, l);
    let mut carry = 0u64;
    let mut count = 0u32;
    while k > 0 || l > 0 || carry > 0 {
        let s = k % p + l % p + carry;
        carry = u64::from(s >= p);
        count += carry as u32;
        k /= p;
        l /= p;
    }
    Ok(count)
}

fn prime_power_factorization(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Support test for the single-`b` word `a^k b a^l` over the integers mod
/// m: outside the support exactly when, for every prime power `p^e`
/// dividing m exactly, the base-p addition of `k` and `l` carries at least
/// `e` times.
pub fn power_word_in_support(k: u64, l: u64, m: u64) -> Result<bool> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if k == 0 && l == 0 {
        return Err(Error::Parse("need k + l >= 1".into()));
    }
    let outside = prime_power_factorization(m)
        .into_iter()
        .all(|(p, e)| kummer_carries(k, l, p).expect("factor is prime") >= e);
    Ok(!outside)
}

/// All subsets `I` with `1 <= |I| <= ⌊n/2⌋` and `p_n(I) ≡ 0 (mod m)`,
/// grouped by size and listed in ascending tuple order.
pub fn kernel_subsets(n: usize, m: u64) -> Result<BTreeMap<usize, Vec<u64>>> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if n == 0 || n > 16 {
        return Err(Error::BudgetExceeded(format!(
            "two-letter kernel enumeration is limited to n <= 16, got {n}"
        )));
    }
    let mut memo = Memo::new();
    let mut out: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for mask in 1..=low_mask(n) {
        let s = mask.count_ones() as usize;
        if s > n / 2 {
            continue;
        }
        if p_memo(n, mask, &mut memo).is_zero_mod(m) {
            out.entry(s).or_default().push(mask);
        }
    }
    for subsets in out.values_mut() {
        subsets.sort_by(|&a, &b| cmp_subsets(a, b));
    }
    Ok(out)
}

/// Exhaustive classification of subset pairs by equality / negation of
/// their Pascal descent polynomials, checked against the reversal
/// characterization (equal for `I = J` or odd `n` with `J = τ(I)`, negated
/// for even `n` with `J = τ(I)`).
#[derive(Debug, Clone)]
pub struct PascalScanReport {
    pub n: usize,
    pub nonzero_count: usize,
    pub equal_pairs: Vec<(u64, u64)>,
    pub negated_pairs: Vec<(u64, u64)>,
    pub violations: Vec<String>,
}

pub fn scan_pascal_pairs(n: usize) -> Result<PascalScanReport> {
    if n == 0 || n > 14 {
        return Err(Error::BudgetExceeded(format!(
            "pair scan is limited to n <= 14, got {n}"
        )));
    }
    let mut memo = Memo::new();
    let mut masks: Vec<u64> = Vec::new();
    let mut polys: Vec<MPoly> = Vec::new();
    for mask in 1..=low_mask(n) {
        let s = mask.count_ones() as usize;
        if s > n / 2 {
            continue;
        }
        let value = p_memo(n, mask, &mut memo);
        if !value.is_zero() {
            masks.push(mask);
            polys.push(value);
        }
    }
    let nonzero_count = masks.len();

    let serialize = |p: &MPoly| -> Vec<(u64, BigInt)> {
        p.terms().map(|(v, c)| (v.0, c.clone())).collect()
    };
    let mut buckets: HashMap<Vec<(u64, BigInt)>, Vec<usize>> = HashMap::new();
    for (i, p) in polys.iter().enumerate() {
        buckets.entry(serialize(p)).or_default().push(i);
    }
    let mut equal_pairs = Vec::new();
    for bucket in buckets.values() {
        for (a, &i) in bucket.iter().enumerate() {
            for &j in &bucket[a + 1..] {
                equal_pairs.push((i, j));
            }
        }
    }
    let mut negated_pairs = Vec::new();
    for (i, p) in polys.iter().enumerate() {
        if let Some(bucket) = buckets.get(&serialize(&p.neg())) {
            for &j in bucket {
                if j > i {
                    negated_pairs.push((i, j));
                }
            }
        }
    }
    equal_pairs.sort_unstable();
    negated_pairs.sort_unstable();

    let mut predicted_equal = Vec::new();
    let mut predicted_negated = Vec::new();
    for (i, &mask) in masks.iter().enumerate() {
        let mirrored = tau_subset(n, mask);
        if mirrored == mask {
            continue;
        }
        if let Ok(j) = masks.binary_search(&mirrored) {
            if j > i {
                if n % 2 == 1 {
                    predicted_equal.push((i, j));
                } else {
                    predicted_negated.push((i, j));
                }
            }
        }
    }
    predicted_equal.sort_unstable();
    predicted_negated.sort_unstable();

    let mut violations = Vec::new();
    let mut flag = |observed: &[(usize, usize)], predicted: &[(usize, usize)], kind: &str| {
        for p in observed.iter().filter(|p| !predicted.contains(p)) {
            violations.push(format!(
                "unexpected {kind} pair ({{{}}}, {{{}}})",
                format_subset(masks[p.0]),
                format_subset(masks[p.1])
            ));
        }
        for p in predicted.iter().filter(|p| !observed.contains(p)) {
            violations.push(format!(
                "missing {kind} pair ({{{}}}, {{{}}})",
                format_subset(masks[p.0]),
                format_subset(masks[p.1])
            ));
        }
    };
    flag(&equal_pairs, &predicted_equal, "equal");
    flag(&negated_pairs, &predicted_negated, "negated");

    let to_masks = |pairs: Vec<(usize, usize)>| {
        pairs
            .into_iter()
            .map(|(i, j)| (masks[i], masks[j]))
            .collect::<Vec<_>>()
    };
    Ok(PascalScanReport {
        n,
        nonzero_count,
        equal_pairs: to_masks(equal_pairs),
        negated_pairs: to_masks(negated_pairs),
        violations,
    })
}
