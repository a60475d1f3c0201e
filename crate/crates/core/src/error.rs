//! Error type shared by every module.

use thiserror::Error;

/// Everything that can go wrong between reading a polytope and issuing a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unknown polytope index {0} (expected {1})")]
    UnknownIndex(u8, &'static str),
    #[error("expected {expected} parameters, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("non-minimal Weierstrass model at {0}")]
    NonMinimal(String),
    #[error("not an elliptic K3 model: {0}")]
    NotK3(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ambiguous: {0}")]
    Ambiguous(String),
    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// Short machine-readable tag, used by the JSON error object of the CLI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid_input",
            Error::UnknownIndex(..) => "unknown_index",
            Error::Arity { .. } => "arity",
            Error::Degenerate(_) => "degenerate",
            Error::NonMinimal(_) => "non_minimal",
            Error::NotK3(_) => "not_k3",
            Error::Unsupported(_) => "unsupported",
            Error::Ambiguous(_) => "ambiguous",
            Error::BoundExceeded(_) => "bound_exceeded",
            Error::Verification(_) => "verification",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
