use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Type/rank pair outside the supported range.
    #[error("unsupported root system `{0}`")]
    UnsupportedType(String),
    /// Bad user-supplied input (dimension mismatch, wrong type for an operation, ...).
    #[error("configuration error: {0}")]
    Config(String),
    /// An operation was called outside its domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A word handed to the folding engine is not reduced.
    #[error("word {word:?} is not reduced (length {length})")]
    NonReduced { word: Vec<u8>, length: usize },
    /// An internal identity failed; signals a bug or inconsistent inputs.
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
