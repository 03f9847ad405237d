use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("weight {index} has level {level} above {k}")]
    LevelTooHigh { index: usize, level: u64, k: u64 },
    #[error("points are not pairwise distinct")]
    RepeatedPoints,
    #[error("number of points {points} differs from number of weights {weights}")]
    PointCount { points: usize, weights: usize },
    #[error("simple root index {0} out of range")]
    BadIndex(usize),
    #[error("invalid root pattern: {0}")]
    InvalidPattern(String),
    #[error("pole of order {order} along {divisor}")]
    HigherOrderPole { divisor: String, order: u32 },
    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),
    #[error("forms live on different variable sets or points")]
    IncompatibleForms,
    #[error("form is not in the span of the basis (nonzero remainder)")]
    NotInSpan,
    #[error("form has free parameters: {0}")]
    HasParameters(String),
    #[error("stratum catalog for M = {m} exceeds the cap {cap}")]
    StratumCapExceeded { m: usize, cap: usize },
    #[error("monomial count {count} exceeds the ceiling {ceiling}")]
    CeilingExceeded { count: u128, ceiling: u128 },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
