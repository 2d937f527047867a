use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group specification at position {position}: {message}")]
    InvalidGroup { position: usize, message: String },

    #[error("expected a vector of length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{what} must be given in the {expected} basis")]
    WrongBasis {
        what: &'static str,
        expected: &'static str,
    },

    #[error("not a root of this system: {0:?}")]
    NotARoot(Vec<i64>),

    #[error(
        "tiebreak vector is not generic: root {0:?} pairs to zero with mass, charge and tiebreak"
    )]
    NonGenericTiebreak(Vec<i64>),

    #[error("charge fails the integrality condition (coroot coordinates must be integers)")]
    NotIntegral,

    #[error("dimension routes disagree: {0}")]
    RouteMismatch(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("weight lies on an indicial line: {0}")]
    OnIndicialLine(String),

    #[error("degenerate grid: {0}")]
    DegenerateGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
