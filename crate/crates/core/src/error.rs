use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("scale bound exceeded: {bound} (limit {limit}, got {actual})")]
    Scale {
        bound: &'static str,
        limit: String,
        actual: String,
    },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("search budget exhausted: {0}")]
    Budget(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown identifier: {0}")]
    Unknown(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn scale(bound: &'static str, limit: impl ToString, actual: impl ToString) -> Self {
        Error::Scale {
            bound,
            limit: limit.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn hyp(msg: impl Into<String>) -> Self {
        Error::Hypothesis(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
