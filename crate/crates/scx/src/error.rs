use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    /// A `.scx` input that could not be read. Line numbers are 1-based.
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
