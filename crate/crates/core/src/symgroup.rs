//! Permutations, descent sums, and the multilinear left normed bracketing
//! `l_n` and its adjoint `l_n*` as sparse elements of the group ring of the
//! symmetric group.
//!
//! Products of permutations compose right to left (`(στ)(i) = σ(τ(i))`), so
//! the place permutation action `(x_1…x_n)·σ = x_{σ(1)}…x_{σ(n)}` is a
//! right action.  `l_n` has support of size `2^{n-1}` (the permutations
//! whose descent set is a prefix interval) and is never expanded densely
//! over the full symmetric group.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ncpoly::{NcPoly, Ring};
use crate::words::Word;

/// A permutation of `[n]` in one-line notation, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based one-line images.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &v in images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::Parse(format!(
                    "not a permutation of 1..={n}: {images:?}"
                )));
            }
            seen[v - 1] = true;
            zero_based.push(v - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Parse one-line notation, e.g. `"3 1 2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let images: Vec<usize> = text
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad image {t:?}")))
            })
            .collect::<Result<_>>()?;
        if images.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        Permutation::from_one_line(&images)
    }

    pub fn one_line(&self) -> String {
        self.images
            .iter()
            .map(|&i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// The descending cycle `ζ_k = (k … 2 1)` inside the symmetric group on
    /// `n` points: `1 ↦ k`, `i ↦ i-1` for `2 <= i <= k`, fixed beyond `k`.
    pub fn descending_cycle(n: usize, k: usize) -> Permutation {
        assert!(k >= 1 && k <= n);
        let mut images: Vec<usize> = (0..n).collect();
        if k >= 2 {
            images[0] = k - 1;
            for i in 1..k {
                images[i] = i - 1;
            }
        }
        Permutation { images }
    }

    /// Descent set as a bitmask: bit `i-1` set when `σ(i) > σ(i+1)`.
    pub fn descent_set(&self) -> u64 {
        let mut mask = 0u64;
        for i in 0..self.images.len().saturating_sub(1) {
            if self.images[i] > self.images[i + 1] {
                mask |= 1 << i;
            }
        }
        mask
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line())
    }
}

/// The order reversing involution `i ↦ n - i + 1`.
pub fn tau(n: usize) -> Permutation {
    Permutation {
        images: (0..n).rev().collect(),
    }
}

/// Sparse element of the group ring of the symmetric group on `n` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    n: usize,
    ring: Ring,
    terms: BTreeMap<Permutation, BigInt>,
}

impl GroupRingElement {
    pub fn zero(n: usize, ring: Ring) -> Self {
        GroupRingElement {
            n,
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn of_permutation(p: Permutation, ring: Ring) -> Self {
        let mut e = GroupRingElement::zero(p.degree(), ring);
        e.add_term(p, BigInt::one());
        e
    }

    pub fn identity(n: usize, ring: Ring) -> Self {
        GroupRingElement::of_permutation(Permutation::identity(n), ring)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Permutation) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, p: Permutation, c: BigInt) {
        let c = self.ring.normalize(c);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = self.ring.normalize(o.get() + c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, other: &GroupRingElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GroupRingElement {
        let mut out = GroupRingElement::zero(self.n, self.ring);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> GroupRingElement {
        let mut out = GroupRingElement::zero(self.n, self.ring);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c * k);
        }
        out
    }

    /// Convolution product honoring right-to-left composition.
    pub fn multiply(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check_compatible(other)?;
        let mut out = GroupRingElement::zero(self.n, self.ring);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q), a * b);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Sum of all permutations whose descent set is exactly `x` (a bitmask over
/// positions `1..n`).
pub fn descent_sum(n: usize, x: u64, ring: Ring) -> Result<GroupRingElement> {
    if n == 0 || (n <= 64 && x >> (n - 1) != 0) {
        return Err(Error::SubsetOutOfRange(n.saturating_sub(1)));
    }
    let mut out = GroupRingElement::zero(n, ring);
    if x.count_ones() as usize == prefix_interval_len(x) {
        // descents exactly {1,…,k-1}: decreasing run ending at the minimum,
        // then increasing; determined by the set of values in the run
        let k = x.count_ones() as usize + 1;
        let mut chosen = Vec::with_capacity(k - 1);
        gen_prefix_descents(n, k, 1, &mut chosen, &mut out);
    } else {
        let mut images = Vec::with_capacity(n);
        let mut used = vec![false; n];
        gen_exact_descents(n, x, &mut images, &mut used, &mut out);
    }
    Ok(out)
}

fn prefix_interval_len(x: u64) -> usize {
    x.trailing_ones() as usize
}

fn gen_prefix_descents(
    n: usize,
    k: usize,
    next: usize,
    chosen: &mut Vec<usize>,
    out: &mut GroupRingElement,
) {
    if chosen.len() == k - 1 {
        let mut images: Vec<usize> = chosen.iter().rev().copied().collect();
        images.push(0);
        let mut in_run = vec![false; n];
        in_run[0] = true;
        for &v in chosen.iter() {
            in_run[v] = true;
        }
        images.extend((1..n).filter(|&v| !in_run[v]));
        out.add_term(Permutation { images }, BigInt::one());
        return;
    }
    for v in next..n {
        if n - v < k - 1 - chosen.len() {
            break;
        }
        chosen.push(v);
        gen_prefix_descents(n, k, v + 1, chosen, out);
        chosen.pop();
    }
}

fn gen_exact_descents(
    n: usize,
    x: u64,
    images: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut GroupRingElement,
) {
    let pos = images.len();
    if pos == n {
        out.add_term(
            Permutation {
                images: images.clone(),
            },
            BigInt::one(),
        );
        return;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        if pos > 0 {
            let want_descent = x & (1 << (pos - 1)) != 0;
            if (images[pos - 1] > v) != want_descent {
                continue;
            }
        }
        used[v] = true;
        images.push(v);
        gen_exact_descents(n, x, images, used, out);
        images.pop();
        used[v] = false;
    }
}

/// The multilinear left normed bracketing as the ordered product
/// `(1 - ζ_2)(1 - ζ_3)…(1 - ζ_n)`.
pub fn l_n(n: usize, ring: Ring) -> GroupRingElement {
    assert!(n >= 1);
    let mut acc = GroupRingElement::identity(n, ring);
    for k in 2..=n {
        let factor = GroupRingElement::identity(n, ring)
            .sub(&GroupRingElement::of_permutation(
                Permutation::descending_cycle(n, k),
                ring,
            ))
            .expect("compatible");
        acc = acc.multiply(&factor).expect("compatible");
    }
    acc
}

/// The same element as the alternating sum of the prefix-interval descent
/// sums `Σ_k (-1)^{k-1} D_{[k-1]}`.
pub fn l_n_via_descents(n: usize, ring: Ring) -> GroupRingElement {
    assert!(n >= 1);
    let mut acc = GroupRingElement::zero(n, ring);
    for k in 1..=n {
        let d = descent_sum(n, (1u64 << (k - 1)) - 1, ring).expect("valid prefix interval");
        let signed = if k % 2 == 1 { d } else { d.neg() };
        acc = acc.add(&signed).expect("compatible");
    }
    acc
}

/// Adjoint of `l_n`: the reversed product of inverse cycles
/// `(1 - ζ_n^{-1})…(1 - ζ_2^{-1})`.
pub fn l_n_star(n: usize, ring: Ring) -> GroupRingElement {
    assert!(n >= 1);
    let mut acc = GroupRingElement::identity(n, ring);
    for k in (2..=n).rev() {
        let factor = GroupRingElement::identity(n, ring)
            .sub(&GroupRingElement::of_permutation(
                Permutation::descending_cycle(n, k).inverse(),
                ring,
            ))
            .expect("compatible");
        acc = acc.multiply(&factor).expect("compatible");
    }
    acc
}

/// Adjoint of `l_n` by coefficient transposition: the coefficient of `σ` in
/// `l_n*` is the coefficient of `σ^{-1}` in `l_n`.
pub fn l_n_star_via_transpose(n: usize, ring: Ring) -> GroupRingElement {
    let mut out = GroupRingElement::zero(n, ring);
    for (p, c) in l_n(n, ring).terms() {
        out.add_term(p.inverse(), c.clone());
    }
    out
}

/// Place permutation right action extended linearly:
/// `w·σ = x_{σ(1)}…x_{σ(n)}` summed over the support of `g`.
pub fn act_on_word(w: &Word, g: &GroupRingElement) -> Result<NcPoly> {
    if w.len() != g.degree() {
        return Err(Error::LengthMismatch {
            left: w.len(),
            right: g.degree(),
        });
    }
    let letters = w.letters();
    let mut out = NcPoly::zero(g.ring());
    for (p, c) in g.terms() {
        let permuted: Vec<u8> = (0..letters.len()).map(|i| letters[p.apply(i)]).collect();
        out = out.add(&NcPoly::monomial(Word::new(permuted), c.clone(), g.ring()))?;
    }
    Ok(out)
}
