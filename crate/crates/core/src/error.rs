use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller broke an operation's documented precondition (shapes, lengths, weights).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A matrix or sequence index that the operation needs is not available.
    #[error("index {index} out of range: {context}")]
    OutOfRange { index: i64, context: String },

    #[error("singular matrix: {0}")]
    Singular(String),

    /// A mathematical hypothesis of a certificate is not met.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported mode: {0}")]
    Unsupported(String),

    /// An enumeration or minor-evaluation cap was hit before the answer was complete.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn out_of_range(index: i64, context: impl Into<String>) -> Self {
        Error::OutOfRange {
            index,
            context: context.into(),
        }
    }

    /// Stable machine-readable code, used by the command-line front-end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Contract(_) => "CONTRACT",
            Error::OutOfRange { .. } => "OUT_OF_RANGE",
            Error::Singular(_) => "SINGULAR",
            Error::Precondition(_) => "PRECONDITION",
            Error::Unsupported(_) => "UNSUPPORTED",
            Error::ResourceLimit(_) => "RESOURCE_LIMIT",
            Error::Parse(_) => "PARSE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
