//! Set partitions of `[n]` in tabloid form, the word ↔ tabloid dictionary,
//! the natural left action of the symmetric group ring, refinement, and
//! kernel enumeration mod m.
//!
//! Blocks are stored as 64-bit sets, so `n <= 64`.  A [`Tabloid`] is an
//! *ordered* partition (the action permutes entries inside blocks and
//! preserves the block positions); the canonical form sorts blocks by
//! weakly decreasing size, ties by minimal element, which is the unique
//! tabloid representative of the underlying unordered partition.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ncpoly::Ring;
use crate::symgroup::{self, GroupRingElement, Permutation};
use crate::words::Word;

fn ground_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Ordered set partition of `[n]` with nonempty pairwise disjoint blocks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tabloid {
    n: usize,
    blocks: Vec<u64>,
}

impl Tabloid {
    pub fn new(n: usize, blocks: Vec<u64>) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::InvalidPartition(format!(
                "ground set size {n} out of range 1..=64"
            )));
        }
        let mut union = 0u64;
        for (i, &b) in blocks.iter().enumerate() {
            if b == 0 {
                return Err(Error::EmptyBlock { block: i + 1 });
            }
            if union & b != 0 {
                return Err(Error::InvalidPartition("blocks overlap".into()));
            }
            union |= b;
        }
        if union != ground_mask(n) {
            return Err(Error::InvalidPartition(format!(
                "blocks do not cover 1..={n}"
            )));
        }
        Ok(Tabloid { n, blocks })
    }

    /// Parse the textual tabloid form, e.g. `1,3,6/2,5,7/4`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        let mut count = 0usize;
        for part in text.split('/') {
            if part.is_empty() {
                continue; // tolerate a trailing slash on the one-block form
            }
            let mut mask = 0u64;
            for item in part.split(',') {
                let v: usize = item
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad block element {item:?}")))?;
                if !(1..=64).contains(&v) {
                    return Err(Error::Parse(format!("element {v} out of range 1..=64")));
                }
                mask |= 1u64 << (v - 1);
                count += 1;
            }
            blocks.push(mask);
        }
        Tabloid::new(count, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    /// Block sizes in stored order.
    pub fn shape(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.count_ones() as usize).collect()
    }

    /// Canonical tabloid form: blocks in weakly decreasing size, equal
    /// sizes ordered by minimal element.
    pub fn canonical(&self) -> Tabloid {
        let mut blocks = self.blocks.clone();
        blocks.sort_by_key(|b| (std::cmp::Reverse(b.count_ones()), b.trailing_zeros()));
        Tabloid {
            n: self.n,
            blocks,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.blocks
            .windows(2)
            .all(|w| {
                let (a, b) = (w[0], w[1]);
                a.count_ones() > b.count_ones()
                    || (a.count_ones() == b.count_ones() && a.trailing_zeros() < b.trailing_zeros())
            })
    }

    /// Entry-wise image under a permutation; block positions are kept.
    pub fn apply_perm(&self, p: &Permutation) -> Tabloid {
        debug_assert_eq!(self.n, p.degree());
        let blocks = self
            .blocks
            .iter()
            .map(|&b| {
                let mut out = 0u64;
                let mut rest = b;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    out |= 1u64 << p.apply(i);
                }
                out
            })
            .collect();
        Tabloid {
            n: self.n,
            blocks,
        }
    }

    /// Every block of `self` is contained in some block of `other`.
    pub fn refines(&self, other: &Tabloid) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .blocks
            .iter()
            .all(|&b| other.blocks.iter().any(|&c| b & c == b)))
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first_block = true;
        for &b in &self.blocks {
            if !first_block {
                write!(f, "/")?;
            }
            first_block = false;
            let mut rest = b;
            let mut first = true;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if !first {
                    write!(f, ",")?;
                }
                first = false;
                write!(f, "{}", i + 1)?;
            }
        }
        Ok(())
    }
}

/// Word ↔ tabloid dictionary: block `k` records the positions of letter
/// `k`.
pub fn word_to_tabloid(w: &Word, r: usize) -> Result<Tabloid> {
    let n = w.len();
    if n == 0 || n > 64 {
        return Err(Error::InvalidPartition(format!(
            "word length {n} out of range 1..=64"
        )));
    }
    let mut blocks = vec![0u64; r];
    for (i, &l) in w.letters().iter().enumerate() {
        if (l as usize) >= r {
            return Err(Error::LetterOutOfRange {
                letter: l as usize,
                bound: r,
            });
        }
        blocks[l as usize] |= 1u64 << i;
    }
    if let Some(k) = blocks.iter().position(|&b| b == 0) {
        return Err(Error::EmptyBlock { block: k + 1 });
    }
    Tabloid::new(n, blocks)
}

pub fn tabloid_to_word(t: &Tabloid, r: usize) -> Result<Word> {
    if t.parts() > r {
        return Err(Error::TooManyBlocks {
            parts: t.parts(),
            letters: r,
        });
    }
    let mut letters = vec![0u8; t.n()];
    for (k, &b) in t.blocks().iter().enumerate() {
        let mut rest = b;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            letters[i] = k as u8;
        }
    }
    Ok(Word::new(letters))
}

/// Formal sum of tabloids with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabloidSum {
    n: usize,
    ring: Ring,
    terms: BTreeMap<Tabloid, BigInt>,
}

impl TabloidSum {
    pub fn zero(n: usize, ring: Ring) -> Self {
        TabloidSum {
            n,
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tabloid, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Tabloid) -> BigInt {
        self.terms.get(t).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn neg(&self) -> TabloidSum {
        let mut out = TabloidSum::zero(self.n, self.ring);
        for (t, c) in &self.terms {
            out.add_term(t.clone(), -c.clone());
        }
        out
    }

    fn add_term(&mut self, t: Tabloid, c: BigInt) {
        let c = self.ring.normalize(c);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
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
}

/// Natural left action extended linearly: `g·t = Σ c_σ (σ·t)` collected
/// with cancellation in the ring of `g`.
pub fn act(g: &GroupRingElement, t: &Tabloid) -> Result<TabloidSum> {
    if g.degree() != t.n() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: t.n(),
        });
    }
    let mut out = TabloidSum::zero(t.n(), g.ring());
    for (p, c) in g.terms() {
        out.add_term(t.apply_perm(p), c.clone());
    }
    Ok(out)
}

/// Stream of all unordered partitions of `[n]` with exactly `r` parts, each
/// yielded once in canonical tabloid form, ordered by their restricted
/// growth string.
pub fn enumerate(n: usize, r: usize) -> Result<TabloidStream> {
    if n == 0 || n > 64 || r < 1 || r > n {
        return Err(Error::InvalidPartition(format!(
            "cannot partition [{n}] into {r} parts"
        )));
    }
    Ok(TabloidStream {
        n,
        r,
        state: None,
        done: false,
    })
}

pub struct TabloidStream {
    n: usize,
    r: usize,
    state: Option<Vec<usize>>,
    done: bool,
}

fn emit_tabloid(n: usize, r: usize, a: &[usize]) -> Tabloid {
    let mut blocks = vec![0u64; r];
    for (i, &cls) in a.iter().enumerate() {
        blocks[cls] |= 1u64 << i;
    }
    Tabloid { n, blocks }.canonical()
}

impl Iterator for TabloidStream {
    type Item = Tabloid;

    fn next(&mut self) -> Option<Tabloid> {
        if self.done {
            return None;
        }
        let (n, r) = (self.n, self.r);
        match &mut self.state {
            None => {
                // smallest restricted growth string with exactly r classes:
                // zeros, then one ramp of new classes at the tail
                let mut a = vec![0usize; n];
                for j in 0..r {
                    a[n - r + j] = j;
                }
                let t = emit_tabloid(n, r, &a);
                self.state = Some(a);
                Some(t)
            }
            Some(a) => {
                let mut i = n;
                loop {
                    if i <= 1 {
                        self.done = true;
                        return None;
                    }
                    i -= 1;
                    let prefix_max = a[..i].iter().copied().max().unwrap();
                    let candidate = a[i] + 1;
                    if candidate > prefix_max + 1 || candidate > r - 1 {
                        continue;
                    }
                    let classes = prefix_max.max(candidate) + 1;
                    let tail = n - 1 - i;
                    if r - classes > tail {
                        continue;
                    }
                    a[i] = candidate;
                    // minimal completion: zeros, then the missing classes
                    let ramp = r - classes;
                    for j in (i + 1)..n {
                        a[j] = 0;
                    }
                    for j in 0..ramp {
                        a[n - ramp + j] = classes + j;
                    }
                    return Some(emit_tabloid(n, r, a));
                }
            }
        }
    }
}

/// Stirling number of the second kind.
pub fn stirling2(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    if n == 0 {
        return BigInt::one();
    }
    if r == 0 {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::zero(); r + 1];
    row[0] = BigInt::one(); // S(0, 0)
    for _ in 1..=n {
        for j in (1..=r).rev() {
            row[j] = &row[j] * BigInt::from(j as u64) + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[r].clone()
}

/// Bell number: the count of all set partitions of `[n]`.
pub fn bell(n: usize) -> BigInt {
    (0..=n).map(|r| stirling2(n, r)).sum()
}

/// Number of ordered partitions of a given type: the multinomial
/// coefficient n! / (λ_1! … λ_r!).
pub fn count_tabloids(shape: &[usize]) -> BigInt {
    let n: usize = shape.iter().sum();
    let mut num = BigInt::one();
    for k in 2..=n.max(1) {
        num *= BigInt::from(k as u64);
    }
    for &part in shape {
        for k in 2..=part.max(1) {
            num /= BigInt::from(k as u64);
        }
    }
    num
}

/// Compact form of the bracketing element used by the kernel search:
/// 0-based images plus a sign.
fn compact_l_n(n: usize) -> Vec<(Vec<usize>, bool)> {
    symgroup::l_n(n, Ring::Int)
        .terms()
        .map(|(p, c)| (p.images().to_vec(), c < &BigInt::zero()))
        .collect()
}

fn annihilated(blocks: &[u64], ln: &[(Vec<usize>, bool)], m: u64) -> bool {
    let mut acc: HashMap<Vec<u64>, u64> = HashMap::with_capacity(ln.len());
    for (images, negative) in ln {
        let moved: Vec<u64> = blocks
            .iter()
            .map(|&b| {
                let mut out = 0u64;
                let mut rest = b;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    out |= 1u64 << images[i];
                }
                out
            })
            .collect();
        let delta = if *negative { m - 1 } else { 1 };
        let e = acc.entry(moved).or_insert(0);
        *e = (*e + delta) % m;
    }
    acc.values().all(|&v| v == 0)
}

/// Listing order for kernel results: coarsest shapes first, then blocks.
fn solution_order(a: &Tabloid, b: &Tabloid) -> std::cmp::Ordering {
    b.shape()
        .cmp(&a.shape())
        .then_with(|| a.blocks.cmp(&b.blocks))
}

/// All unordered partitions of `[n]` into `r` parts annihilated by the
/// bracketing element over the integers mod m, in canonical form.
pub fn kernel_enumerate(n: usize, m: u64, r: usize) -> Result<Vec<Tabloid>> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let ln = compact_l_n(n);
    let candidates: Vec<Tabloid> = enumerate(n, r)?.collect();
    let mut hits: Vec<Tabloid> = candidates
        .into_par_iter()
        .filter(|t| annihilated(t.blocks(), &ln, m))
        .collect();
    hits.sort_unstable_by(solution_order);
    Ok(hits)
}

/// The generating antichain of the kernel mod m: kernel tabloids not
/// refined by any kernel tabloid with strictly more parts.  Every kernel
/// tabloid with at most `⌈n/2⌉` parts is refined by some member; parts
/// beyond that bound cannot occur.
pub fn minimal_solutions(n: usize, m: u64) -> Result<Vec<Tabloid>> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let max_parts = n.div_ceil(2);
    let mut all: Vec<Tabloid> = Vec::new();
    for r in 1..=max_parts {
        all.extend(kernel_enumerate(n, m, r)?);
    }
    let mut minimal: Vec<Tabloid> = Vec::new();
    for t in &all {
        let dominated = all.iter().any(|s| {
            s.parts() > t.parts() && s.refines(t).expect("same ground set")
        });
        if !dominated {
            minimal.push(t.clone());
        }
    }
    minimal.sort_unstable_by(solution_order);
    Ok(minimal)
}

/// Closed-form kernel test over the integers: only the one-block partition
/// and, for even `n`, the tabloids refined by the symmetric pairing
/// `1,n / 2,n-1 / … / k,k+1`.
pub fn kernel_characterize_int(t: &Tabloid) -> bool {
    if t.parts() == 1 {
        return true;
    }
    let n = t.n();
    if !n.is_multiple_of(2) {
        return false;
    }
    // the pairing refines t: each {i, n+1-i} lies inside one block
    (0..n / 2).all(|i| {
        let pair = (1u64 << i) | (1u64 << (n - 1 - i));
        t.blocks().iter().any(|&b| b & pair == pair)
    })
}

/// The symmetric pairing tabloid `1,n / 2,n-1 / … / k,k+1` for `n = 2k`.
pub fn pairing_tabloid(n: usize) -> Result<Tabloid> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::InvalidPartition(format!(
            "pairing tabloid needs even ground set, got {n}"
        )));
    }
    let blocks = (0..n / 2)
        .map(|i| (1u64 << i) | (1u64 << (n - 1 - i)))
        .collect();
    Ok(Tabloid { n, blocks }.canonical())
}

/// The odd-length palindrome tabloid `1,n / 2,n-1 / … / r,r+2 / r+1` for
/// `n = 2r + 1`.
pub fn odd_palindrome_tabloid(n: usize) -> Result<Tabloid> {
    if n % 2 != 1 {
        return Err(Error::InvalidPartition(format!(
            "odd palindrome tabloid needs odd ground set, got {n}"
        )));
    }
    let r = n / 2;
    let mut blocks: Vec<u64> = (0..r)
        .map(|i| (1u64 << i) | (1u64 << (n - 1 - i)))
        .collect();
    blocks.push(1u64 << r);
    Ok(Tabloid { n, blocks }.canonical())
}

/// The hook tabloid `1,3,5,…,2r+1 / 2 / 4 / … / 2r` for `n = 2r + 1`.
pub fn hook_tabloid(n: usize) -> Result<Tabloid> {
    if n % 2 != 1 {
        return Err(Error::InvalidPartition(format!(
            "hook tabloid needs odd ground set, got {n}"
        )));
    }
    let mut blocks = vec![0u64];
    for i in (0..n).step_by(2) {
        blocks[0] |= 1u64 << i;
    }
    for i in (1..n).step_by(2) {
        blocks.push(1u64 << i);
    }
    Ok(Tabloid { n, blocks }.canonical())
}

/// Exhaustive classification of pairs of tabloids of a common type by
/// equality / negation of their images under the bracketing element over
/// the integers, checked against the reversal-involution characterization.
#[derive(Debug, Clone)]
pub struct TabloidScanReport {
    pub n: usize,
    pub shape: Vec<usize>,
    pub nonzero_count: usize,
    pub equal_pairs: Vec<(Tabloid, Tabloid)>,
    pub negated_pairs: Vec<(Tabloid, Tabloid)>,
    pub violations: Vec<String>,
}

pub fn scan_tabloid_pairs(n: usize, shape: &[usize]) -> Result<TabloidScanReport> {
    if shape.is_empty() || shape.contains(&0) || shape.iter().sum::<usize>() != n {
        return Err(Error::InvalidPartition(format!(
            "shape {shape:?} is not a composition of {n}"
        )));
    }
    let total = count_tabloids(shape);
    if total > BigInt::from(200_000u64) {
        return Err(Error::BudgetExceeded(format!(
            "{total} tabloids of shape {shape:?}"
        )));
    }
    let mut tabloids: Vec<Tabloid> = Vec::new();
    enumerate_shape(n, shape, 0, ground_mask(n), &mut Vec::new(), &mut tabloids);

    let ln = symgroup::l_n(n, Ring::Int);
    let mut keys: Vec<Option<Vec<(Tabloid, BigInt)>>> = Vec::with_capacity(tabloids.len());
    for t in &tabloids {
        let image = act(&ln, t)?;
        if image.is_zero() {
            keys.push(None);
        } else {
            keys.push(Some(
                image.terms().map(|(u, c)| (u.clone(), c.clone())).collect(),
            ));
        }
    }
    let mut buckets: HashMap<&Vec<(Tabloid, BigInt)>, Vec<usize>> = HashMap::new();
    for (i, key) in keys.iter().enumerate() {
        if let Some(k) = key {
            buckets.entry(k).or_default().push(i);
        }
    }
    let nonzero_count = buckets.values().map(Vec::len).sum();

    let mut equal_pairs = Vec::new();
    for bucket in buckets.values() {
        for (a, &i) in bucket.iter().enumerate() {
            for &j in &bucket[a + 1..] {
                equal_pairs.push((i, j));
            }
        }
    }
    let mut negated_pairs = Vec::new();
    for (i, key) in keys.iter().enumerate() {
        if let Some(k) = key {
            let negated: Vec<(Tabloid, BigInt)> =
                k.iter().map(|(t, c)| (t.clone(), -c.clone())).collect();
            if let Some(bucket) = buckets.get(&negated) {
                for &j in bucket {
                    if j > i {
                        negated_pairs.push((i, j));
                    }
                }
            }
        }
    }
    equal_pairs.sort_unstable();
    negated_pairs.sort_unstable();

    let reversal = symgroup::tau(n);
    let mut predicted_equal = Vec::new();
    let mut predicted_negated = Vec::new();
    for (i, t) in tabloids.iter().enumerate() {
        if keys[i].is_none() {
            continue;
        }
        let mirrored = t.apply_perm(&reversal);
        if mirrored == *t {
            continue;
        }
        if let Some(j) = tabloids.iter().position(|s| *s == mirrored) {
            if j > i && keys[j].is_some() {
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
                "unexpected {kind} pair ({}, {})",
                tabloids[p.0], tabloids[p.1]
            ));
        }
        for p in predicted.iter().filter(|p| !observed.contains(p)) {
            violations.push(format!(
                "missing {kind} pair ({}, {})",
                tabloids[p.0], tabloids[p.1]
            ));
        }
    };
    flag(&equal_pairs, &predicted_equal, "equal-image");
    flag(&negated_pairs, &predicted_negated, "negated-image");

    let to_tabloids = |pairs: Vec<(usize, usize)>| {
        pairs
            .into_iter()
            .map(|(i, j)| (tabloids[i].clone(), tabloids[j].clone()))
            .collect::<Vec<_>>()
    };
    Ok(TabloidScanReport {
        n,
        shape: shape.to_vec(),
        nonzero_count,
        equal_pairs: to_tabloids(equal_pairs),
        negated_pairs: to_tabloids(negated_pairs),
        violations,
    })
}

fn enumerate_shape(
    n: usize,
    shape: &[usize],
    index: usize,
    remaining: u64,
    blocks: &mut Vec<u64>,
    out: &mut Vec<Tabloid>,
) {
    if index == shape.len() {
        debug_assert_eq!(remaining, 0);
        out.push(Tabloid {
            n,
            blocks: blocks.clone(),
        });
        return;
    }
    let size = shape[index];
    subsets_of(remaining, size, 0, &mut |mask| {
        blocks.push(mask);
        enumerate_shape(n, shape, index + 1, remaining & !mask, blocks, out);
        blocks.pop();
    });
}

/// Visit every `size`-element subset of the set bits of `pool`.
fn subsets_of(pool: u64, size: usize, acc: u64, f: &mut impl FnMut(u64)) {
    if size == 0 {
        f(acc);
        return;
    }
    if (pool.count_ones() as usize) < size {
        return;
    }
    let low = pool & pool.wrapping_neg();
    subsets_of(pool & !low, size - 1, acc | low, f);
    subsets_of(pool & !low, size, acc, f);
}
