use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed operand: non-square, non-finite, mismatched dimensions.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A scalar parameter outside its admissible range (p <= 0, |d| >= n, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A (sub)majorisation precondition failed at the given prefix length.
    #[error("infeasible target: partial sum of length {prefix} exceeds its bound")]
    Infeasible { prefix: usize },

    /// A ratio whose denominator vanishes.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A postcondition check failed; this is a bug, not a domain outcome.
    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
