use thiserror::Error;

/// Errors surfaced by the library and the command-line frontend.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed document: {0}")]
    Document(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A computation could not reach a certain answer inside its probe window.
    #[error("indeterminate: {0}")]
    Indeterminate(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
