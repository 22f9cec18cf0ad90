use num_rational::Ratio;
use thiserror::Error;

/// Errors raised by the series kernel and the constructors built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precision error: {0}")]
    Precision(String),
    #[error("series is not invertible: no nonzero coefficient below precision {0}")]
    NotInvertible(Ratio<i64>),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("divergent theta function: exponent sum {0} is not positive")]
    DivergentTheta(Ratio<i64>),
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("class basis for discriminant {0} is degenerate")]
    BasisDegenerate(i64),
    #[error("series is not in the span of the class basis: first failure at q^{exponent}")]
    NotInSpan { exponent: Ratio<i64> },
}

pub type Result<T> = std::result::Result<T, Error>;
