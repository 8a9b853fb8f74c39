use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a plat diagram needs n >= 1")]
    ZeroWidth,

    #[error("plat diagrams have an odd number of rows, got m = {0}")]
    EvenRowCount(usize),

    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },

    #[error("row {row} has length {found}, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },

    #[error("box ({row}, {column}): {p}/{q} is not a reduced fraction")]
    NonReducedBox { row: usize, column: usize, p: i64, q: i64 },

    #[error("{p}/{q} is not a reduced fraction")]
    NonReduced { p: i64, q: i64 },

    #[error("continued fraction needs at least one term")]
    EmptyContinuedFraction,

    #[error("integer overflow while evaluating a fraction")]
    Overflow,

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("path has {found} entries, diagram has {expected} rows")]
    PathLength { expected: usize, found: usize },

    #[error("path ({path}) is not allowable: {reason}")]
    NotAllowable { path: String, reason: String },

    #[error("path was built for a diagram of a different shape")]
    ShapeMismatch,

    #[error("n = {0}: the link is a two-bridge link and has no allowable sphere")]
    TwoBridge(usize),

    #[error("box ({row}, {column}) is not supported by {operation}")]
    UnsupportedBox {
        row: usize,
        column: usize,
        operation: &'static str,
    },

    #[error("diagram has no crossings")]
    NoCrossings,

    #[error("link component {0} has no crossings")]
    CrossingFreeComponent(usize),

    #[error("expected {expected} slopes (one per link component), found {found}")]
    SlopeCount { expected: usize, found: usize },

    #[error("invalid slope {0:?}")]
    BadSlope(String),

    #[error("invalid path syntax {0:?}")]
    BadPathSyntax(String),

    #[error("diagram format: {0}")]
    Format(String),

    #[error("sphere decomposition is inconsistent: {0}")]
    Inconsistent(String),
}
