use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("singular system: rank {rank} < {size}")]
    SingularSystem { rank: usize, size: usize },
    #[error("inconsistent linear system")]
    InconsistentSystem,
    #[error("denominator vanishes under specialization")]
    ZeroDenominator,
    #[error("degree {degree} exceeds cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("invalid object: {0}")]
    InvalidObject(String),
    #[error("formula outside its domain: {0}")]
    OutOfDomain(String),
    #[error("unknown identifier: {0}")]
    Unknown(String),
    #[error("internal: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
