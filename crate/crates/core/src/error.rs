use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller passed arguments that violate an operation's precondition.
    #[error("usage error: {0}")]
    Usage(String),
    /// The input lies outside the domain on which the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// A linear system had no unique solution at the chosen matrix size.
    #[error("singular system at N={n}: {reason}; retry with a larger N")]
    Singular { n: usize, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
    /// Two independent computations of the same quantity disagreed.
    #[error("cross-check failed: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
