use thiserror::Error;

/// Everything that can go wrong while reading, validating or computing with diagrams.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HfError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    /// The data parses but does not describe a valid multi-pointed Heegaard diagram.
    #[error("invalid diagram: {0}")]
    Invalid(String),

    /// A move or operation was asked for something its preconditions rule out.
    #[error("rejected: {0}")]
    Rejected(String),

    /// An internal consistency check failed (for instance d^2 != 0).
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

impl HfError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        HfError::Invalid(msg.into())
    }

    pub(crate) fn rejected(msg: impl Into<String>) -> Self {
        HfError::Rejected(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        HfError::Consistency(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, HfError>;
