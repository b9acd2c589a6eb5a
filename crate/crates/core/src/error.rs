use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entry {value} at position {position} is outside [0, {n}]")]
    OutOfRange { position: usize, value: i64, n: usize },

    #[error("nonzero value {value} occurs more than once")]
    DuplicateNonzero { value: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("size {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },

    #[error("invalid rook triple: {0}")]
    InvalidTriple(String),

    #[error("not an R-code: {0}")]
    NotAnRCode(String),

    #[error("word is not reduced")]
    NotReduced,

    #[error("not a permutation")]
    NotAPermutation,

    #[error("rook is not in MCR_n")]
    NotInMcr,

    #[error("rook is not fixed by st_{k}")]
    NotStellar { k: usize },

    #[error("rook is not idempotent")]
    NotIdempotent,

    #[error("bound exceeded: n = {n} > {max}")]
    BoundExceeded { n: usize, max: usize },

    #[error("cannot mix s-letters with pi-letters of positive index")]
    MixedAlphabet,

    #[error("idempotent power did not stabilise")]
    NoStabilisation,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
