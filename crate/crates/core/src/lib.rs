//! Exact knot-concordance and lattice-embedding invariants.
//!
//! * [`algebra`]: rationals, Gaussian rationals, polynomials, Laurent
//!   polynomials, Sturm root isolation and exact unit-circle points.
//! * [`seifert`]: Alexander polynomials, determinants and Tristram–Levine
//!   signatures of Seifert matrices.
//! * [`knfamily`]: the twisted family `K_n` with `K_0 = T(3,7)`, and
//!   certificates for its signature jumps and linear independence.
//! * [`lattice`]: integral lattices and complete embedding search into
//!   `(ℤᴺ, ±I)`.
//! * [`lens`]: continued fractions, plumbing lattices and the
//!   definite-embedding obstruction for sums of lens spaces.
//!
//! The linear algebra and polynomial code is generic over the scalar
//! ([`algebra::Ring`], [`algebra::Field`], [`algebra::HermitianScalar`]);
//! every verdict is computed at the exact instances aliased below.

pub mod algebra;
pub mod knfamily;
pub mod lattice;
pub mod lens;
pub mod seifert;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use algebra::{CirclePoint, IsolatingInterval};

/// Reduced big rational with positive denominator.
pub type Rational = BigRational;
pub type Integer = BigInt;
pub type GaussianRational = algebra::Gaussian<Rational>;
pub type RationalPolynomial = algebra::Polynomial<Rational>;
pub type Laurent = algebra::LaurentPolynomial<Rational>;
pub type RationalMatrix = algebra::Matrix<Rational>;
pub type GaussianMatrix = algebra::Matrix<GaussianRational>;
pub type IntMatrix = algebra::Matrix<i64>;
