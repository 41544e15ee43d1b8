use alloc::string::String;

/// Errors raised by the exact computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("power series expansion needs a denominator with nonzero constant term")]
    SingularSeries,
    #[error("group is not finite within bound {0}")]
    NotFinite(usize),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("closed form does not clear to a polynomial: {0}")]
    NotPolynomial(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = core::result::Result<T, Error>;
