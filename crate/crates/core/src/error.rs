use thiserror::Error;

/// Errors shared across the toolkit.
///
/// Cap violations are hard refusals: no operation silently degrades to a
/// partial answer when a group is too large for an exact computation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("group order {order} exceeds cap {cap}")]
    OrderExceedsCap { order: u128, cap: u128 },

    #[error("group order overflows 128-bit arithmetic")]
    OrderOverflow,

    #[error("coset index {index} exceeds cap {cap}")]
    IndexExceedsCap { index: u128, cap: u128 },

    #[error("permutation degree {degree} exceeds cap {cap}")]
    DegreeExceedsCap { degree: usize, cap: usize },

    #[error("subgroup is not normal in the ambient group")]
    NotNormal,

    #[error("group is not solvable")]
    NotSolvable,

    #[error("generators do not lie in the ambient group")]
    NotSubgroup,

    #[error("prime {p} divides the group order")]
    PDividesOrder { p: u64 },

    #[error("no prime found within search bound {bound}")]
    SearchBoundExceeded { bound: u64 },

    #[error("module search failed after {budget} attempts")]
    SearchFailed { budget: u32 },

    #[error("irreducibility test inconclusive after exhausting its random budget")]
    Inconclusive,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
