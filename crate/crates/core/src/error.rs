use thiserror::Error;

use crate::ncpoly::Ring;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: Ring, right: Ring },
    #[error("invalid modulus {0}: need 0 (integers) or m >= 2")]
    InvalidModulus(u64),
    #[error("word lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("letter index {letter} out of range (alphabet size {bound})")]
    LetterOutOfRange { letter: usize, bound: usize },
    #[error("word is not a Lyndon word")]
    NotLyndon,
    #[error("factor length {r} out of range for word of length {n}")]
    FactorLengthOutOfRange { r: usize, n: usize },
    #[error("no Bezout witness: the adjoint of the word vanishes")]
    ZeroAdjoint,
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("subset out of range for ground set [{0}]")]
    SubsetOutOfRange(usize),
    #[error("empty subset not allowed here")]
    EmptySubset,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("block {block} is empty (letter unused)")]
    EmptyBlock { block: usize },
    #[error("tabloid has {parts} blocks but the alphabet has {letters} letters")]
    TooManyBlocks { parts: usize, letters: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}
