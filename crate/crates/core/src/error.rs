use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("Cartan matrix is not of finite type: more than {cap} positive roots")]
    NotFiniteType { cap: usize },
    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("letter {letter} out of range 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("Weyl group has more than {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("{v:?} is not below {w:?} in Bruhat order")]
    NotBelow { v: Vec<usize>, w: Vec<usize> },
    #[error("operation requires a type A root system")]
    NotTypeA,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("box ({row}, {col}) lies outside the shape")]
    BoxOutsideShape { row: usize, col: usize },
    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenberg(String),
    #[error("element {0:?} is not in the group or fixed-point set")]
    UnknownElement(Vec<usize>),
    #[error("invalid index set: {0}")]
    InvalidSubset(String),
    #[error("{0}")]
    Unsolvable(String),
}

pub type Result<T> = core::result::Result<T, Error>;
