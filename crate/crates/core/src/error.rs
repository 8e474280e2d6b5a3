use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("length {0} outside supported range 1..=128")]
    UnsupportedLength(usize),

    #[error("enumeration budget exceeded: {what} needs 2^{needed}, limit 2^{limit}")]
    Budget {
        what: &'static str,
        needed: usize,
        limit: usize,
    },

    #[error("size budget exceeded: {what} has {size} entries, limit {limit}")]
    SizeBudget {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("unknown code name `{0}`")]
    UnknownCode(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("generators are linearly dependent (rank {rank} < {rows})")]
    Dependent { rank: usize, rows: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not invariant under {0}")]
    NotInvariant(&'static str),

    #[error("nonzero residual: {0}")]
    Residual(String),

    #[error("not divisible: {0}")]
    NotDivisible(String),

    #[error("tetrad system `{0}` is not in Koch's list")]
    OutsideKochList(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
