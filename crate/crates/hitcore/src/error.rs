use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("matrix dimensions do not agree")]
    DimensionMismatch,
    #[error("order is not a permutation of the coordinates")]
    InvalidOrder,
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("no minimal spike: mu({n}) exceeds {d} variables")]
    NoMinimalSpike { d: usize, n: u32 },
    #[error("monomial count overflows for d={d}, n={n}")]
    CountOverflow { d: usize, n: u32 },
    #[error("budget exceeded: {what} needs {needed}, limit {limit}")]
    BudgetExceeded { what: &'static str, needed: usize, limit: usize },
    #[error("subspace is not closed under the group action")]
    NotActionClosed,
    #[error("element is not a cycle")]
    NotCycle,
    #[error("cache entry corrupt: {0}")]
    CacheCorrupt(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
