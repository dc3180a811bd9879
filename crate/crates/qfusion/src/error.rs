use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotPartition(Vec<usize>),
    #[error("partition {part} does not fit in a {rows}x{cols} box")]
    BoxViolation { part: String, rows: usize, cols: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parameter mismatch: {0}")]
    Mismatch(String),
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("zero base with negative exponent")]
    ZeroBase,
    #[error("numeric residual {residual:e} exceeds tolerance {tol:e}")]
    Residual { residual: f64, tol: f64 },
    #[error("pole: u*x_i = 1")]
    Pole,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("multipartition is not aperiodic")]
    NotAperiodic,
}

pub type Result<T> = std::result::Result<T, Error>;
