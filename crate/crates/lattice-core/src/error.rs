use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("no positive grading: no rational row vector maps every column to 1")]
    NoPositiveGrading,
    #[error("fiber too large: more than {cap} points over rhs {rhs:?}")]
    FiberTooLarge { rhs: Vec<i64>, cap: usize },
    #[error("invalid variable labels: {0}")]
    InvalidLabels(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, LatticeError>;
