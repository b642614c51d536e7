//! Exact arithmetic in `Q(e1, e2)` and its four-variable extension.

mod parse;
mod poly;
mod ratfun;
mod series;

pub use parse::parse_ratfun;
pub use poly::{IntPoly, Monomial, MAX_VARS, VAR_NAMES};
pub use ratfun::{Fraction, RatFun};
pub use series::{expand_linear_quotient, USeries};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at e2 = -e1: denominator has factor {factor}")]
    Pole { factor: String },
    #[error("parse error: {0}")]
    Parse(String),
}

/// `e1 + e2`.
pub fn hbar() -> RatFun {
    RatFun::hbar()
}

/// `-(e1 + e2)`.
pub fn hbar_prime() -> RatFun {
    -RatFun::hbar()
}

/// `N * e2`.
pub fn t_param(n: usize) -> RatFun {
    RatFun::linear(0, n as i64)
}
