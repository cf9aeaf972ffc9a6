use thiserror::Error;

/// Errors produced by the exact, sampled and simulated computations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// The requested size exceeds a configured or structural cap.
    #[error("{what}: requested {requested} exceeds cap {cap}")]
    Capacity {
        what: &'static str,
        requested: u64,
        cap: u64,
    },

    /// An argument is outside the domain of the operation.
    #[error("invalid argument: {0}")]
    Domain(String),

    /// Two inputs that must share a size do not.
    #[error("size mismatch: {0}")]
    Mismatch(String),

    /// A text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A numerical or combinatorial invariant failed. Signals a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn mismatch(msg: impl Into<String>) -> Self {
        Error::Mismatch(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    /// True for errors caused by the caller's input rather than a bug.
    pub fn is_user_error(&self) -> bool {
        !matches!(self, Error::Invariant(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
