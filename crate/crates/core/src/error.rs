use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {dim} exceeds the configured cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("level {level} exceeds the configured cap of {cap}")]
    LevelCap { level: usize, cap: usize },
    #[error("{0} requires pointed simplicial sets")]
    Unpointed(&'static str),
    #[error("mismatched arguments: {0}")]
    Mismatch(String),
    #[error("invalid simplicial set: {0}")]
    InvalidSet(String),
    #[error("invalid simplicial map: {0}")]
    InvalidMap(String),
    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),
    #[error("invalid chain complex: {0}")]
    InvalidComplex(String),
    #[error("boundary composite is nonzero at degree {degree}")]
    BoundarySquare { degree: i64 },
    #[error("invalid chain map: {0}")]
    InvalidChainMap(String),
    #[error("enumeration budget of {budget} candidates exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("partition function rejected at index {index}: {reason}")]
    Partition { index: usize, reason: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("construction check failed: {0}")]
    Construction(String),
    #[error("malformed document: {0}")]
    Document(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
