use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unstable graph: vertex {vertex} has genus {genus} and valence {valence}")]
    Unstable { vertex: usize, genus: u32, valence: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("stability bound violated: 2g + n = {0} < 3")]
    StabilityBound(usize),
    #[error("invalid nest: {0}")]
    InvalidNest(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("boundary maps do not compose to zero at degree {degree}")]
    NotAComplex { degree: i64 },
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
