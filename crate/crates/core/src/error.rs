use thiserror::Error;

/// Errors surfaced by every public operation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input (bad ground set, overlapping classes, ...).
    #[error("structural error: {0}")]
    Structural(String),
    /// A documented precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An enumeration would exceed its documented cap.
    #[error("capacity exceeded: {what} needs {needed}, cap is {cap}")]
    Capacity { what: String, needed: usize, cap: usize },
    /// A referenced id does not exist.
    #[error("unknown id: {0}")]
    Lookup(String),
    /// Input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// An internal certificate failed re-verification. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn capacity(what: impl Into<String>, needed: usize, cap: usize) -> Self {
        Error::Capacity { what: what.into(), needed, cap }
    }
}

pub(crate) fn check_cap(what: &str, needed: usize, cap: usize) -> Result<()> {
    if needed > cap {
        Err(Error::capacity(what, needed, cap))
    } else {
        Ok(())
    }
}
