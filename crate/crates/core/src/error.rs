//! Error type shared by every module of the crate.

/// Failures reported by library operations.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different groups (mismatched `r` or `n`).
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// An argument violates the precondition of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An enumeration would exceed the configured size guard.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// Group parameters outside the supported range.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A computed result contradicts an internal consistency check.
    #[error("inconsistent result: {0}")]
    Inconsistency(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
