use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("rank mismatch: expected {expected} components, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("charge mismatch: {0} vs {1}")]
    ChargeMismatch(i64, i64),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unknown canonical basis label {0}")]
    UnknownLabel(String),
    #[error("straightening ordering violation: {0}")]
    OrderingViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
