use thiserror::Error;

use crate::scalar::ScalarError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("malformed presentation: {0}")]
    MalformedPresentation(String),
    #[error("unsupported parameters: {0}")]
    UnsupportedParams(String),
    #[error("{0} is not group-like")]
    NotGroupLike(String),
    #[error("operands belong to different parents: {0}")]
    ParentMismatch(String),
    #[error("input is not homogeneous: {0}")]
    NonHomogeneous(String),
    #[error("truncation exceeded: {what} needs {size} entries (cap {cap})")]
    TruncationExceeded { what: String, size: u128, cap: u128 },
    #[error("element is not a cocycle: {0}")]
    NotACocycle(String),
    #[error("extraction failed: {0}")]
    ExtractionFailure(String),
    #[error("not a bialgebra morphism: {0}")]
    NotABialgebraMorphism(String),
    #[error("axioms fail: {0}")]
    AxiomFailure(String),
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
