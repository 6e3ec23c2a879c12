//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension {0} is not prime")]
    NotPrime(usize),

    #[error("register mismatch: {0}")]
    RegisterMismatch(String),

    #[error("matrix is not unitary (max deviation {0:.3e})")]
    NonUnitary(f64),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("unknown macro gate `{0}`")]
    UnknownMacro(String),

    #[error("circuit still contains macro gate `{0}`; expand it first")]
    UnexpandedMacro(String),

    #[error("document error at {path}: {reason}")]
    Document { path: String, reason: String },

    #[error("impossible post-selection outcome (probability {0:.3e})")]
    ImpossibleOutcome(f64),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn document(path: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Document { path: path.into(), reason: reason.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
