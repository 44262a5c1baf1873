//! Exact arithmetic substrate: scalar traits, Gaussian numbers, dense
//! matrices, polynomials, Laurent polynomials, Sturm root isolation and
//! rational points on the unit circle.

mod circle;
mod gaussian;
mod laurent;
mod matrix;
mod polynomial;
mod scalar;
pub mod sturm;

pub use circle::CirclePoint;
pub use gaussian::Gaussian;
pub use laurent::LaurentPolynomial;
pub use matrix::{Inertia, Matrix};
pub use polynomial::Polynomial;
pub use scalar::{rat, ratio, Field, HermitianScalar, OrderedField, Ring};
pub use sturm::{isolate, isolate_all, IsolatingInterval, SturmSequence};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("evaluation at zero of a polynomial with negative exponents")]
    EvaluationAtZero,
    #[error("Laurent polynomial has an odd exponent")]
    OddExponent,
    #[error("Laurent polynomial is not symmetric under x -> 1/x")]
    NotSymmetric,
    #[error("root isolation of the zero polynomial")]
    ZeroPolynomial,
    #[error("empty isolation window")]
    EmptyWindow,
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `n`, `-n` or `n/d` with `d != 0`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| format!("invalid rational `{s}`"))?;
    let d: BigInt = d.parse().map_err(|_| format!("invalid rational `{s}`"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rational::new(n, d))
}
