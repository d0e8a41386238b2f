use thiserror::Error;

/// Errors raised by the exact-arithmetic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("{len} coefficients do not fit in a series of order {order}")]
    TooManyCoefficients { len: usize, order: usize },

    #[error("series is not invertible: constant term is {0}, expected 1")]
    NotInvertible(String),

    #[error("coefficient index {index} exceeds truncation order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("middle classes live in different quadrics (d = {left} vs d = {right})")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what} exceeds the enumeration budget of {budget}")]
    Budget { what: String, budget: String },

    #[error("degree {degree} is not divisible by {d}! = {factorial}")]
    NotDivisible {
        degree: String,
        d: u32,
        factorial: String,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
