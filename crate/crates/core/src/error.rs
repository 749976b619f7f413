use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("non-finite entry at index {0}")]
    NonFiniteEntry(usize),
    #[error("column {0} is zero (norm below zero_col_tol)")]
    ZeroColumn(usize),
    #[error("column index {index} out of range for {cols} columns")]
    IndexOutOfRange { index: usize, cols: usize },
    #[error("column indices must be strictly increasing")]
    UnsortedIndices,
    #[error("need at least two columns, matrix has {0}")]
    TooFewColumns(usize),
    #[error("matrix is not underdetermined ({rows} rows, {cols} columns)")]
    NotUnderdetermined { rows: usize, cols: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("diagonal entry {0} is not 1")]
    NotUnitDiagonal(usize),
    #[error("subset budget exceeded after examining {0} subsets")]
    BudgetExceeded(u64),
    #[error("no solution with at most {0} nonzero entries")]
    NoSolutionWithinKmax(usize),
    #[error("invalid dimension n = {0} (need n >= 2)")]
    InvalidN(usize),
    #[error("invalid tolerance field {0}")]
    InvalidTolerance(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
