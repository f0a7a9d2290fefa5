use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("row count {rows} exceeds enumeration cap {cap}")]
    RowCapExceeded { rows: usize, cap: usize },
    #[error("decoder table would need {rows} syndrome bits, cap is {cap}")]
    TableTooLarge { rows: usize, cap: usize },
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
