use thiserror::Error;

/// Errors produced by the analysis library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("malformed ANF token {token:?}: {reason}")]
    MalformedToken { token: String, reason: &'static str },

    #[error("duplicate monomial {0:?}")]
    DuplicateMonomial(String),

    #[error("{what} refused: n = {n} exceeds the cap of {cap}{hint}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("{what} refused: {size} items exceed the cap of {cap} (pass the long-run flag)")]
    SizeCapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("degree {0} is larger than 2; a graph state needs a quadratic")]
    NotQuadratic(usize),

    #[error("graph is not bipartite with the given side")]
    NotBipartite,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid transform spec {0:?}")]
    InvalidSpec(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
