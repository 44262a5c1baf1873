//! Scalar traits the generic routines are written against.
//!
//! Everything verdict-bearing in this crate is instantiated at
//! [`Rational`](crate::Rational) or [`GaussianRational`](crate::GaussianRational);
//! the float instances exist for quick experiments and heuristics.

use std::fmt::Debug;
use std::ops::{Div, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

/// A commutative ring with identity.
pub trait Ring: Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

impl<T> Ring for T where T: Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

/// A ring with a division operator.
///
/// For genuine fields `/` is the field quotient. Integral domains such as
/// `BigInt` or [`Polynomial`](crate::algebra::Polynomial) also qualify; the
/// fraction-free routines only ever divide when the quotient is exact.
pub trait Field: Ring + Div<Output = Self> {}

impl<T> Field for T where T: Ring + Div<Output = Self> {}

/// A totally ordered field.
pub trait OrderedField: Field + PartialOrd {
    fn abs_val(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// -1, 0 or 1.
    fn sign(&self) -> i32 {
        let zero = Self::zero();
        if *self > zero {
            1
        } else if *self < zero {
            -1
        } else {
            0
        }
    }
}

impl<T> OrderedField for T where T: Field + PartialOrd {}

/// Scalars carrying a conjugation whose fixed points form an ordered field.
///
/// Real fields are their own conjugates; [`Gaussian`](super::Gaussian)
/// numbers conjugate the imaginary part.
pub trait HermitianScalar: Field {
    type Real: OrderedField;

    fn conj(&self) -> Self;
    fn real_part(&self) -> Self::Real;
    fn from_real(r: Self::Real) -> Self;

    /// |z|², which is real and nonnegative.
    fn norm_sqr(&self) -> Self::Real {
        (self.clone() * self.conj()).real_part()
    }
}

macro_rules! real_hermitian {
    ($($t:ty),*) => {$(
        impl HermitianScalar for $t {
            type Real = $t;
            fn conj(&self) -> Self {
                self.clone()
            }
            fn real_part(&self) -> Self {
                self.clone()
            }
            fn from_real(r: Self) -> Self {
                r
            }
        }
    )*};
}

real_hermitian!(f32, f64, BigRational, Ratio<i64>, Ratio<i128>);

/// Exact integer to rational lift.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `num/den` as a reduced rational. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
