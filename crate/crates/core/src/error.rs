use thiserror::Error;

use crate::order::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity mismatch: expected n = {expected}, found n = {found}")]
    Arity { expected: usize, found: usize },

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("weight {0} is not in the region (every pair ω_i + ω_(n+i) must be positive)")]
    NotInRegion(Weight),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
