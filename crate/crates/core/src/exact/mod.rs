//! Exact scalars: rationals, polynomials in `T`, truncated series in `u^{-1}`.

mod poly;
mod rational;
mod series;

pub use poly::Poly;
pub use rational::Rational;
pub use series::{alpha_series, series_ratio_alpha, SeriesRing, TruncSeries};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by the nonconstant polynomial {0}")]
    NonConstantDivisor(String),
    #[error("series constant term is not invertible")]
    NotInvertible,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Evaluates `p` at `T = t`.
pub fn poly_eval(p: &Poly, t: &Rational) -> Rational {
    p.eval(t)
}
