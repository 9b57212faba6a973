use std::fmt;

/// Errors surfaced by the library.
///
/// `InvalidParameters` means the caller handed us values that violate a type
/// invariant; `Inapplicable` means the values are fine but the requested
/// criterion or closed form does not cover them.  `Internal` marks a broken
/// consistency check that should be unreachable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidParameters(String),
    Inapplicable(String),
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameters(msg) => write!(f, "invalid parameters: {msg}"),
            Error::Inapplicable(msg) => write!(f, "not applicable: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
