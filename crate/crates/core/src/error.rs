use crate::partitions::Cell;

/// Errors raised by the tableau transforms and the verification oracles.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid partition {parts:?}: parts must be positive and weakly decreasing")]
    InvalidPartition { parts: Vec<usize> },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid Gelfand-Tsetlin pattern: {0}")]
    InvalidPattern(String),

    #[error("{what}: {actual} exceeds the cap of {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("box {0} is not in the shape")]
    BoxOutOfShape(Cell),

    #[error("the rectangle spanned by {0} is not contained in the shape")]
    RectangleNotInShape(Cell),

    #[error("expected a square shape, got {0:?}")]
    NotSquare(Vec<usize>),

    #[error("entry {entry} is outside [1, {max}]")]
    EntryOutOfRange { entry: u64, max: usize },

    #[error("Gelfand-Tsetlin patterns disagree on their first row")]
    FirstRowMismatch,

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("box {0} is not a corner box")]
    NotCorner(Cell),

    #[error("tableau is not weakly increasing along rows and columns")]
    NotRpp,

    #[error("box order is not a linear extension of the shape: {0}")]
    NotLinearExtension(String),

    #[error("array kind mismatch: expected {expected}, got {actual}")]
    KindMismatch {
        expected: &'static str,
        actual: &'static str,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("array domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("path leaves the shape at {0}")]
    PathOutOfShape(Cell),

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("endpoint {0} is not in the shape")]
    EndpointOutOfShape(Cell),

    #[error("no noncrossing path family connects the given endpoints")]
    NoFamily,

    #[error("no weight supplied for content {0}")]
    MissingWeight(i64),

    #[error("weight for content {0} must be positive")]
    NonPositiveWeight(i64),

    #[error("weight for content {0} must be an integer")]
    NonIntegerWeight(i64),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("integer overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
