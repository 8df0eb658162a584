//! Exact computations in free Lie algebras over the integers and the
//! integers mod m.
//!
//! The central object is the adjoint endomorphism `l*` of the left normed
//! Lie bracketing `l` of a free Lie algebra: a word `w` appears in some Lie
//! polynomial (lies in the *support*) exactly when `l*(w) != 0` over the
//! coefficient ring, and the twin/anti-twin classification of word pairs is
//! decided by `l*(u) -+ l*(v)`.  The crate provides
//!
//! * [`words`] — alphabets, words, literal morphisms and Lyndon machinery,
//! * [`ncpoly`] — sparse noncommutative polynomials with exact coefficients,
//!   concatenation, shuffle and the canonical scalar product,
//! * [`lie`] — the bracketing, three independent algorithms for the adjoint,
//!   the gcd invariant `c(w)`, Bezout witnesses and support/twin decisions,
//! * [`symgroup`] — permutations, descent sums and the multilinear
//!   bracketing as a group ring element,
//! * [`partitions`] — set partitions in tabloid form, the natural action on
//!   them and kernel enumeration mod m,
//! * [`pascal`] — the two letter specialization: Pascal descent polynomials
//!   and the signed-row-sum invariant.

pub mod error;
pub mod lie;
pub mod ncpoly;
pub mod partitions;
pub mod pascal;
pub mod symgroup;
pub mod words;

pub use error::{Error, Result};
