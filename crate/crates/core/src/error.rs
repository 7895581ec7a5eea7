use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("weight {0:?} is not weakly decreasing")]
    NotDominant(Vec<i64>),
    #[error("weight {0:?} is not a Young diagram")]
    NotDiagram(Vec<i64>),
    #[error("diagram {entries:?} exceeds width {width}")]
    WidthExceeded { entries: Vec<i64>, width: i64 },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("terms live on different spaces: {0} vs {1}")]
    SpaceMismatch(String, String),
    #[error("character is not Weyl-invariant at exponent {0:?}")]
    NotInvariant(Vec<i64>),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
