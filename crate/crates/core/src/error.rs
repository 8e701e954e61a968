use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum QctError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {p}^{e} exceeds the size cap {cap}")]
    FieldTooLarge { p: u64, e: u32, cap: u64 },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("search cap exceeded: {0}")]
    SearchCapExceeded(String),
    #[error("invalid defining set: {0}")]
    InvalidDefiningSet(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("codes are not nested: {0}")]
    NotNested(String),
    #[error("degenerate construction: {0}")]
    Degenerate(String),
    #[error("code is not MDS: {0}")]
    NotMds(String),
    #[error("precondition failed: {}", .0.join("; "))]
    Preconditions(Vec<String>),
    #[error("malformed record: {0}")]
    MalformedRecord(String),
    #[error("catalog entry not found: {0}")]
    NotFound(String),
    #[error("{context}: {source}")]
    Io {
        context: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = QctError> = std::result::Result<T, E>;

impl QctError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        QctError::Io {
            context: path.into(),
            source,
        }
    }
}
