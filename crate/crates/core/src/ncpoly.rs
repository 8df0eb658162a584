//! Sparse noncommutative polynomials with exact coefficients over the
//! integers or the integers mod m.
//!
//! Coefficients are arbitrary precision; mod-m values are kept reduced to
//! `0..m`.  Terms are stored in the canonical order (length first, then
//! lexicographic) so text and JSON serializations are deterministic.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

/// Coefficient ring: the integers, or the integers mod m with m >= 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Int,
    Mod(u64),
}

impl Ring {
    /// Build a ring from the CLI-style flag: 0 means the integers, m >= 2
    /// the integers mod m.  m = 1 is rejected: everything collapses.
    pub fn from_flag(m: u64) -> Result<Ring> {
        match m {
            0 => Ok(Ring::Int),
            1 => Err(Error::InvalidModulus(1)),
            m => Ok(Ring::Mod(m)),
        }
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            Ring::Int => None,
            Ring::Mod(m) => Some(m),
        }
    }

    pub fn normalize(self, c: BigInt) -> BigInt {
        match self {
            Ring::Int => c,
            Ring::Mod(m) => c.mod_floor(&BigInt::from(m)),
        }
    }

    fn check_same(self, other: Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self,
                right: other,
            })
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Int => write!(f, "Z"),
            Ring::Mod(m) => write!(f, "Z_{m}"),
        }
    }
}

/// Noncommutative polynomial: a finite map from words to nonzero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPoly {
    ring: Ring,
    terms: BTreeMap<Word, BigInt>,
}

impl NcPoly {
    pub fn zero(ring: Ring) -> Self {
        NcPoly {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(word: Word, coeff: BigInt, ring: Ring) -> Self {
        let mut p = NcPoly::zero(ring);
        p.add_term(word, coeff);
        p
    }

    pub fn word(word: Word, ring: Ring) -> Self {
        NcPoly::monomial(word, BigInt::one(), ring)
    }

    pub fn letter(letter: u8, ring: Ring) -> Self {
        NcPoly::word(Word::single(letter), ring)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, word: Word, coeff: BigInt) {
        let coeff = self.ring.normalize(coeff);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = self.ring.normalize(o.get() + coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &NcPoly) -> Result<NcPoly> {
        self.ring.check_same(other.ring)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NcPoly) -> Result<NcPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NcPoly {
        let mut out = NcPoly::zero(self.ring);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> NcPoly {
        let mut out = NcPoly::zero(self.ring);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    /// Concatenation product.
    pub fn concat(&self, other: &NcPoly) -> Result<NcPoly> {
        self.ring.check_same(other.ring)?;
        let mut out = NcPoly::zero(self.ring);
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                out.add_term(u.concat(v), cu * cv);
            }
        }
        Ok(out)
    }

    /// Right multiplication by a single letter.
    pub fn append_letter(&self, letter: u8) -> NcPoly {
        let mut out = NcPoly::zero(self.ring);
        for (w, c) in &self.terms {
            out.add_term(w.appended(letter), c.clone());
        }
        out
    }

    /// Left multiplication by a single letter.
    pub fn prepend_letter(&self, letter: u8) -> NcPoly {
        let mut out = NcPoly::zero(self.ring);
        for (w, c) in &self.terms {
            let mut letters = Vec::with_capacity(w.len() + 1);
            letters.push(letter);
            letters.extend_from_slice(w.letters());
            out.add_term(Word::new(letters), c.clone());
        }
        out
    }

    /// Shuffle product: bilinear extension of the word recursion
    /// `au' ⧢ bv' = a(u' ⧢ bv') + b(au' ⧢ v')` with the empty word neutral.
    pub fn shuffle(&self, other: &NcPoly) -> Result<NcPoly> {
        self.ring.check_same(other.ring)?;
        let mut memo: ShuffleMemo = HashMap::new();
        let mut out = NcPoly::zero(self.ring);
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let counts = shuffle_words(u.letters(), v.letters(), &mut memo);
                let k = cu * cv;
                for (w, mult) in counts.iter() {
                    out.add_term(w.clone(), mult * &k);
                }
            }
        }
        Ok(out)
    }

    /// Canonical scalar product making the words an orthonormal basis.
    pub fn scalar_product(&self, other: &NcPoly) -> Result<BigInt> {
        self.ring.check_same(other.ring)?;
        let mut total = BigInt::zero();
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (w, c) in &small.terms {
            if let Some(d) = large.terms.get(w) {
                total += c * d;
            }
        }
        Ok(self.ring.normalize(total))
    }

    /// Coefficient-wise projection from the integers onto the integers
    /// mod m.
    pub fn reduce_mod(&self, m: u64) -> Result<NcPoly> {
        if self.ring != Ring::Int {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: Ring::Int,
            });
        }
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        let mut out = NcPoly::zero(Ring::Mod(m));
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    /// Gcd of the coefficients, reported nonnegative; zero for the zero
    /// polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    /// True when every coefficient is divisible by m.
    pub fn is_zero_mod(&self, m: u64) -> bool {
        let m = BigInt::from(m);
        self.terms.values().all(|c| (c % &m).is_zero())
    }

    /// Canonical text form: terms in canonical order joined by `+`/`-`,
    /// unit coefficients omitted, the empty word rendered as `1`.
    pub fn to_text(&self, alphabet: &Alphabet) -> Result<String> {
        if self.terms.is_empty() {
            return Ok("0".into());
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if w.is_empty() {
                out.push_str(&magnitude.to_string());
            } else {
                if !magnitude.is_one() {
                    out.push_str(&magnitude.to_string());
                }
                out.push_str(&alphabet.format_word(w)?);
            }
        }
        Ok(out)
    }
}

type ShuffleMemo = HashMap<(Vec<u8>, Vec<u8>), BTreeMap<Word, BigInt>>;

fn shuffle_words(u: &[u8], v: &[u8], memo: &mut ShuffleMemo) -> BTreeMap<Word, BigInt> {
    if u.is_empty() {
        return BTreeMap::from([(Word::new(v.to_vec()), BigInt::one())]);
    }
    if v.is_empty() {
        return BTreeMap::from([(Word::new(u.to_vec()), BigInt::one())]);
    }
    let key = (u.to_vec(), v.to_vec());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut counts: BTreeMap<Word, BigInt> = BTreeMap::new();
    for (first, rest_u, rest_v) in [(u[0], &u[1..], v), (v[0], u, &v[1..])] {
        for (w, c) in shuffle_words(rest_u, rest_v, memo) {
            let mut letters = Vec::with_capacity(w.len() + 1);
            letters.push(first);
            letters.extend_from_slice(w.letters());
            *counts.entry(Word::new(letters)).or_insert_with(BigInt::zero) += c;
        }
    }
    memo.insert(key, counts.clone());
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;
    use proptest::prelude::*;

    fn alpha() -> Alphabet {
        Alphabet::latin(4)
    }

    fn w(text: &str) -> Word {
        alpha().parse_word(text).unwrap()
    }

    fn poly(pairs: &[(&str, i64)]) -> NcPoly {
        let mut p = NcPoly::zero(Ring::Int);
        for &(text, c) in pairs {
            p = p
                .add(&NcPoly::monomial(w(text), BigInt::from(c), Ring::Int))
                .unwrap();
        }
        p
    }

    #[test]
    fn addition_drops_zero_terms() {
        let p = poly(&[("ab", 1)]);
        let q = poly(&[("ab", -1)]);
        assert!(p.add(&q).unwrap().is_zero());
        assert!(p.scale(&BigInt::zero()).is_zero());
        assert_eq!(
            poly(&[("ab", 2)]).add(&poly(&[("ba", 3)])).unwrap(),
            poly(&[("ab", 2), ("ba", 3)])
        );
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let p = poly(&[("ab", 1)]);
        let q = p.reduce_mod(3).unwrap();
        assert!(p.add(&q).is_err());
        assert!(p.concat(&q).is_err());
        assert!(p.shuffle(&q).is_err());
        assert!(p.scalar_product(&q).is_err());
    }

    #[test]
    fn concat_examples() {
        assert_eq!(
            poly(&[("a", 1)]).concat(&poly(&[("b", 1)])).unwrap(),
            poly(&[("ab", 1)])
        );
        // (a - b)(a + b) = a^2 + ab - ba - b^2
        let left = poly(&[("a", 1), ("b", -1)]);
        let right = poly(&[("a", 1), ("b", 1)]);
        assert_eq!(
            left.concat(&right).unwrap(),
            poly(&[("aa", 1), ("ab", 1), ("ba", -1), ("bb", -1)])
        );
        // the empty word monomial is a two-sided identity
        let one = NcPoly::word(Word::empty(), Ring::Int);
        let p = poly(&[("ab", 2), ("ca", -1)]);
        assert_eq!(p.concat(&one).unwrap(), p);
        assert_eq!(one.concat(&p).unwrap(), p);
    }

    #[test]
    fn shuffle_examples() {
        let one = NcPoly::word(Word::empty(), Ring::Int);
        let p = poly(&[("abc", 3)]);
        assert_eq!(one.shuffle(&p).unwrap(), p);
        assert_eq!(
            poly(&[("a", 1)]).shuffle(&poly(&[("a", 1)])).unwrap(),
            poly(&[("aa", 2)])
        );
        assert_eq!(
            poly(&[("ab", 1)]).shuffle(&poly(&[("c", 1)])).unwrap(),
            poly(&[("abc", 1), ("acb", 1), ("cab", 1)])
        );
    }

    #[test]
    fn shuffle_coefficient_sum_on_disjoint_letters() {
        // (w ⧢ v) has coefficient sum C(|w|+|v|, |w|) when no letters are shared
        for (u, v) in [("ab", "c"), ("aab", "cd"), ("abab", "ccd")] {
            let s = poly(&[(u, 1)]).shuffle(&poly(&[(v, 1)])).unwrap();
            let total: BigInt = s.terms().map(|(_, c)| c.clone()).sum();
            let expected = binomial(BigInt::from(u.len() + v.len()), BigInt::from(u.len()));
            assert_eq!(total, expected);
        }
    }

    #[test]
    fn scalar_product_examples() {
        let p = poly(&[("ab", 1), ("ba", -1)]);
        assert_eq!(
            poly(&[("ab", 1)])
                .scalar_product(&poly(&[("ab", 1)]))
                .unwrap(),
            BigInt::one()
        );
        assert_eq!(
            p.scalar_product(&poly(&[("ab", 1)])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            p.scalar_product(&poly(&[("ba", 1)])).unwrap(),
            BigInt::from(-1)
        );
    }

    #[test]
    fn reduce_mod_examples() {
        let p = poly(&[("ab", 2), ("ba", 3)]);
        assert_eq!(p.reduce_mod(2).unwrap(), poly(&[("ba", 1)]).reduce_mod(2).unwrap());
        assert!(poly(&[("ab", 6)]).reduce_mod(3).unwrap().is_zero());
        assert!(p.reduce_mod(1).is_err());
        assert!(p.reduce_mod(0).is_err());
    }

    #[test]
    fn content_is_nonnegative_gcd() {
        assert_eq!(poly(&[]).content(), BigInt::zero());
        assert_eq!(poly(&[("ab", -4), ("ba", 6)]).content(), BigInt::from(2));
    }

    #[test]
    fn text_form() {
        let a = alpha();
        assert_eq!(poly(&[]).to_text(&a).unwrap(), "0");
        assert_eq!(
            poly(&[("ab", 1), ("ba", -1)]).to_text(&a).unwrap(),
            "ab - ba"
        );
        assert_eq!(
            poly(&[("ba", -2), ("ab", 1)]).to_text(&a).unwrap(),
            "ab - 2ba"
        );
        assert_eq!(
            poly(&[("ab", -1), ("ba", 1)]).to_text(&a).unwrap(),
            "-ab + ba"
        );
        // empty word monomial prints as a bare integer
        let p = NcPoly::monomial(Word::empty(), BigInt::from(3), Ring::Int);
        assert_eq!(p.to_text(&a).unwrap(), "3");
        // terms sorted by length then lexicographically
        assert_eq!(
            poly(&[("ba", 1), ("b", 1), ("ab", 1)]).to_text(&a).unwrap(),
            "b + ab + ba"
        );
    }

    #[test]
    fn schmidt_identity_two_letters() {
        // sum over factorizations w = st of (-1)^|s| (reverse(s) ⧢ t)
        // vanishes for every nonempty word
        for n in 1..=10usize {
            for word in crate::words::all_words(2, n) {
                let mut total = NcPoly::zero(Ring::Int);
                for cut in 0..=n {
                    let s = word.factor(0, cut).reversed();
                    let t = word.factor(cut, n);
                    let term = NcPoly::word(s, Ring::Int)
                        .shuffle(&NcPoly::word(t, Ring::Int))
                        .unwrap();
                    let signed = if cut % 2 == 0 { term } else { term.neg() };
                    total = total.add(&signed).unwrap();
                }
                assert!(total.is_zero(), "Schmidt identity failed for {word}");
            }
        }
    }

    fn arb_poly() -> impl Strategy<Value = NcPoly> {
        proptest::collection::vec(
            (proptest::collection::vec(0u8..2, 0..4), -3i64..4),
            0..4,
        )
        .prop_map(|terms| {
            let mut p = NcPoly::zero(Ring::Int);
            for (letters, c) in terms {
                p = p
                    .add(&NcPoly::monomial(
                        Word::new(letters),
                        BigInt::from(c),
                        Ring::Int,
                    ))
                    .unwrap();
            }
            p
        })
    }

    proptest! {
        #[test]
        fn shuffle_is_commutative(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(p.shuffle(&q).unwrap(), q.shuffle(&p).unwrap());
        }

        #[test]
        fn shuffle_is_associative(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            let left = p.shuffle(&q).unwrap().shuffle(&r).unwrap();
            let right = p.shuffle(&q.shuffle(&r).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn concat_distributes_over_addition(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            let left = p.concat(&q.add(&r).unwrap()).unwrap();
            let right = p.concat(&q).unwrap().add(&p.concat(&r).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
