//! Alphabets, words, structural predicates, literal morphisms and Lyndon
//! word machinery.
//!
//! Words are stored as sequences of indices into an [`Alphabet`]; the
//! alphabet only matters for parsing and display.  The total order on words
//! is length first, then lexicographic on the index sequence: this is the
//! canonical term order used for polynomial serialization.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Ordered alphabet of distinct symbols; the order is the list position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::Parse("alphabet must not be empty".into()));
        }
        let mut seen = BTreeSet::new();
        for &c in &letters {
            if !seen.insert(c) {
                return Err(Error::Parse(format!("duplicate letter {c:?} in alphabet")));
            }
        }
        Ok(Alphabet { letters })
    }

    pub fn from_str_letters(s: &str) -> Result<Self> {
        Alphabet::new(s.chars())
    }

    /// The first `r` lowercase latin letters `a..z`.
    pub fn latin(r: usize) -> Self {
        assert!((1..=26).contains(&r), "latin alphabet size must be 1..=26");
        Alphabet {
            letters: (0..r).map(|i| (b'a' + i as u8) as char).collect(),
        }
    }

    /// The binary alphabet `{0,1}` used as the target of indicator morphisms.
    pub fn binary() -> Self {
        Alphabet {
            letters: vec!['0', '1'],
        }
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }

    pub fn letter(&self, index: usize) -> Option<char> {
        self.letters.get(index).copied()
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.letters.iter().position(|&l| l == c)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            match self.index_of(c) {
                Some(i) => letters.push(i as u8),
                None => return Err(Error::Parse(format!("letter {c:?} not in alphabet"))),
            }
        }
        Ok(Word(letters))
    }

    pub fn format_word(&self, w: &Word) -> Result<String> {
        if w.is_empty() {
            return Ok("ε".into());
        }
        let mut out = String::with_capacity(w.len());
        for &l in w.letters() {
            match self.letter(l as usize) {
                Some(c) => out.push(c),
                None => {
                    return Err(Error::LetterOutOfRange {
                        letter: l as usize,
                        bound: self.size(),
                    })
                }
            }
        }
        Ok(out)
    }

    /// Infer an alphabet from the first-occurrence order of the letters in
    /// `text` and parse the word against it.
    pub fn infer(text: &str) -> Result<(Alphabet, Word)> {
        let mut letters: Vec<char> = Vec::new();
        let mut indices = Vec::with_capacity(text.len());
        for c in text.chars() {
            if !c.is_ascii_lowercase() {
                return Err(Error::Parse(format!(
                    "invalid letter {c:?}: words use lowercase ascii"
                )));
            }
            let i = match letters.iter().position(|&l| l == c) {
                Some(i) => i,
                None => {
                    letters.push(c);
                    letters.len() - 1
                }
            };
            indices.push(i as u8);
        }
        if letters.is_empty() {
            letters.push('a');
        }
        Ok((Alphabet { letters }, Word(indices)))
    }
}

/// A finite word: a sequence of letter indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(letter: u8) -> Self {
        Word(vec![letter])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Set of letters actually occurring.
    pub fn alph(&self) -> BTreeSet<u8> {
        self.0.iter().copied().collect()
    }

    pub fn alph_size(&self) -> usize {
        self.alph().len()
    }

    /// Power of a single letter with exponent greater than one.
    pub fn is_power(&self) -> bool {
        self.0.len() >= 2 && self.0.iter().all(|&l| l == self.0[0])
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn is_even_palindrome(&self) -> bool {
        self.0.len().is_multiple_of(2) && !self.0.is_empty() && self.is_palindrome()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn appended(&self, letter: u8) -> Word {
        let mut letters = self.0.clone();
        letters.push(letter);
        Word(letters)
    }

    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn max_letter(&self) -> Option<u8> {
        self.0.iter().copied().max()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        // length first, then lexicographic: the canonical term order
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        for &l in &self.0 {
            let c = if l < 26 { (b'a' + l) as char } else { '?' };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Apply a literal morphism given as a letter table: letter `i` maps to
/// `map[i]`.
pub fn literal_morphism(map: &[u8], w: &Word) -> Result<Word> {
    let mut letters = Vec::with_capacity(w.len());
    for &l in w.letters() {
        match map.get(l as usize) {
            Some(&img) => letters.push(img),
            None => {
                return Err(Error::LetterOutOfRange {
                    letter: l as usize,
                    bound: map.len(),
                })
            }
        }
    }
    Ok(Word(letters))
}

/// Letter table of the indicator morphism onto `{0,1}`: letters in `b` map
/// to 1, the rest to 0.
pub fn indicator_map(r: usize, b: &BTreeSet<u8>) -> Vec<u8> {
    (0..r).map(|i| u8::from(b.contains(&(i as u8)))).collect()
}

/// Multidegree of `w` over an alphabet of `r` letters: occurrence counts in
/// alphabet order.
pub fn multidegree(w: &Word, r: usize) -> Result<Vec<usize>> {
    let mut counts = vec![0usize; r];
    for &l in w.letters() {
        if (l as usize) >= r {
            return Err(Error::LetterOutOfRange {
                letter: l as usize,
                bound: r,
            });
        }
        counts[l as usize] += 1;
    }
    Ok(counts)
}

/// A word is Lyndon when it is nonempty and strictly smaller than all of its
/// proper rotations.
pub fn is_lyndon(w: &Word) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    let s = w.letters();
    for k in 1..n {
        let rotation = s[k..].iter().chain(s[..k].iter());
        if s.iter().ge(rotation) {
            return false;
        }
    }
    true
}

/// All Lyndon words of length `n` over `r` letters, lexicographically
/// sorted.  Duval-style successor iteration.
pub fn lyndon_words(r: usize, n: usize) -> Vec<Word> {
    assert!(r >= 1, "alphabet size must be at least 1");
    assert!(n >= 1, "word length must be at least 1");
    let top = (r - 1) as u8;
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == n {
            out.push(Word(w.clone()));
        }
        let k = w.len();
        while w.len() < n {
            let next = w[w.len() - k];
            w.push(next);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Right standard factorization of a Lyndon word of length at least two:
/// `w = uv` with `v` the longest proper Lyndon suffix.  Both halves are
/// again Lyndon.
pub fn standard_factorization(w: &Word) -> Result<(Word, Word)> {
    if w.len() < 2 || !is_lyndon(w) {
        return Err(Error::NotLyndon);
    }
    for i in 1..w.len() {
        let v = w.factor(i, w.len());
        if is_lyndon(&v) {
            let u = w.factor(0, i);
            debug_assert!(is_lyndon(&u));
            return Ok((u, v));
        }
    }
    unreachable!("every Lyndon word has a Lyndon last letter suffix")
}

/// All words of length `n` over `r` letters in lexicographic order.
pub fn all_words(r: usize, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current = vec![0u8; n];
    loop {
        out.push(Word(current.clone()));
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (current[i] as usize) < r - 1 {
                current[i] += 1;
                for slot in current.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Alphabet::latin(26).parse_word(text).unwrap()
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(Word::empty().reversed(), Word::empty());
        assert_eq!(w("abca").reversed(), w("acba"));
        assert_eq!(w("aabba").reversed(), w("abbaa"));
    }

    #[test]
    fn alph_examples() {
        assert!(Word::empty().alph().is_empty());
        assert_eq!(w("aaaaa").alph(), [0].into_iter().collect());
        assert_eq!(w("aacbdbba").alph(), [0, 1, 2, 3].into_iter().collect());
    }

    #[test]
    fn power_and_palindrome_predicates() {
        assert!(w("aaa").is_power());
        assert!(!w("a").is_power());
        assert!(!w("aab").is_power());
        assert!(w("abba").is_even_palindrome());
        assert!(!w("aba").is_even_palindrome());
        assert!(!Word::empty().is_even_palindrome());
    }

    #[test]
    fn literal_morphism_examples() {
        // indicator of {b} on a^2 b^2 a
        let map = indicator_map(2, &[1].into_iter().collect());
        assert_eq!(
            literal_morphism(&map, &w("aabba")).unwrap(),
            Word::new(vec![0, 0, 1, 1, 0])
        );
        // indicator of {a,b} on aacbdbba
        let map = indicator_map(4, &[0, 1].into_iter().collect());
        assert_eq!(
            literal_morphism(&map, &w("aacbdbba")).unwrap(),
            Word::new(vec![1, 1, 0, 1, 0, 1, 1, 1])
        );
        // a->e, b->f, c->f on abca
        let map = vec![4, 5, 5];
        assert_eq!(literal_morphism(&map, &w("abca")).unwrap(), w("effe"));
        // letter outside the table domain
        assert!(literal_morphism(&[0, 1], &w("abc")).is_err());
    }

    #[test]
    fn morphism_commutes_with_reversal() {
        let map = vec![1, 0, 1];
        for text in ["", "a", "abc", "aacbc", "cbacba"] {
            let word = w(text);
            assert_eq!(
                literal_morphism(&map, &word.reversed()).unwrap(),
                literal_morphism(&map, &word).unwrap().reversed()
            );
        }
    }

    #[test]
    fn multidegree_examples() {
        assert_eq!(multidegree(&w("aacbdbba"), 4).unwrap(), vec![3, 3, 1, 1]);
        assert_eq!(multidegree(&Word::empty(), 3).unwrap(), vec![0, 0, 0]);
        assert_eq!(multidegree(&w("bbbb"), 2).unwrap(), vec![0, 4]);
        assert!(multidegree(&w("abc"), 2).is_err());
    }

    /// Brute-force Lyndon test: strictly least among proper rotations.
    fn is_lyndon_oracle(word: &Word) -> bool {
        let n = word.len();
        if n == 0 {
            return false;
        }
        let s = word.letters();
        (1..n).all(|k| {
            let mut rot: Vec<u8> = s[k..].to_vec();
            rot.extend_from_slice(&s[..k]);
            s < rot.as_slice()
        })
    }

    #[test]
    fn lyndon_words_small_cases() {
        assert_eq!(lyndon_words(2, 2), vec![w("ab")]);
        assert_eq!(lyndon_words(2, 4), vec![w("aaab"), w("aabb"), w("abbb")]);
        assert_eq!(lyndon_words(2, 1), vec![w("a"), w("b")]);
    }

    #[test]
    fn lyndon_words_match_rotation_oracle() {
        for r in 1..=3 {
            for n in 1..=6 {
                let expected: Vec<Word> = all_words(r, n)
                    .into_iter()
                    .filter(is_lyndon_oracle)
                    .collect();
                assert_eq!(lyndon_words(r, n), expected, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn lyndon_counts_match_necklace_formula() {
        fn mobius(mut d: u64) -> i64 {
            let mut mu = 1i64;
            let mut p = 2;
            while p * p <= d {
                if d.is_multiple_of(p) {
                    d /= p;
                    if d.is_multiple_of(p) {
                        return 0;
                    }
                    mu = -mu;
                }
                p += 1;
            }
            if d > 1 {
                mu = -mu;
            }
            mu
        }
        for r in 1..=3u64 {
            for n in 1..=8u64 {
                let mut total = 0i64;
                for d in 1..=n {
                    if n % d == 0 {
                        total += mobius(d) * (r.pow((n / d) as u32) as i64);
                    }
                }
                let expected = (total / n as i64) as usize;
                assert_eq!(
                    lyndon_words(r as usize, n as usize).len(),
                    expected,
                    "r={r} n={n}"
                );
            }
        }
    }

    #[test]
    fn standard_factorization_examples() {
        let (u, v) = standard_factorization(&w("ab")).unwrap();
        assert_eq!((u, v), (w("a"), w("b")));
        // the suffix is the longest proper Lyndon one, consistent with the
        // recursive basis construction [a,[a,[[a,b],b]]] for a^3 b^2
        assert_eq!(
            standard_factorization(&w("aabb")).unwrap(),
            (w("a"), w("abb"))
        );
        assert_eq!(
            standard_factorization(&w("aaabb")).unwrap(),
            (w("a"), w("aabb"))
        );
        assert!(standard_factorization(&w("ba")).is_err());
        assert!(standard_factorization(&w("a")).is_err());
    }

    proptest::proptest! {
        #[test]
        fn reverse_is_an_involution(letters in proptest::collection::vec(0u8..4, 0..12)) {
            let word = Word::new(letters);
            proptest::prop_assert_eq!(word.reversed().reversed(), word);
        }
    }

    #[test]
    fn standard_factorization_takes_longest_lyndon_suffix() {
        for r in 2..=3 {
            for n in 2..=8 {
                for word in lyndon_words(r, n) {
                    let (u, v) = standard_factorization(&word).unwrap();
                    assert_eq!(u.concat(&v), word);
                    assert!(is_lyndon(&u) && is_lyndon(&v));
                    // no longer proper Lyndon suffix exists
                    for i in 1..(word.len() - v.len()) {
                        assert!(!is_lyndon(&word.factor(i, word.len())));
                    }
                }
            }
        }
    }

    #[test]
    fn words_identified_by_all_indicator_images() {
        // two words of common length coincide iff all single-letter
        // indicator images coincide
        for n in 1..=4 {
            let words = all_words(3, n);
            for u in &words {
                for v in &words {
                    let mut all_equal = true;
                    for letter in 0..3u8 {
                        let map = indicator_map(3, &[letter].into_iter().collect());
                        if literal_morphism(&map, u).unwrap() != literal_morphism(&map, v).unwrap()
                        {
                            all_equal = false;
                            break;
                        }
                    }
                    assert_eq!(all_equal, u == v);
                }
            }
        }
    }

    #[test]
    fn alphabet_parsing() {
        let (alpha, word) = Alphabet::infer("bab").unwrap();
        assert_eq!(alpha.size(), 2);
        assert_eq!(alpha.letter(0), Some('b'));
        assert_eq!(word, Word::new(vec![0, 1, 0]));
        assert!(Alphabet::from_str_letters("aba").is_err());
        assert!(Alphabet::latin(4).parse_word("axe").is_err());
        assert_eq!(alpha.format_word(&word).unwrap(), "bab");
    }

    #[test]
    fn word_order_is_length_then_lex() {
        assert!(w("b") < w("ab"));
        assert!(w("ab") < w("ba"));
        assert!(Word::empty() < w("a"));
    }
}
