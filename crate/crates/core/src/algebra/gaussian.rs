use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{Field, HermitianScalar, OrderedField, Ring};

/// `re + im·i` over an ordered field.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gaussian<T> {
    pub re: T,
    pub im: T,
}

impl<T> Gaussian<T> {
    pub fn new(re: T, im: T) -> Self {
        Gaussian { re, im }
    }
}

impl<T: Ring> Gaussian<T> {
    pub fn from_real(re: T) -> Self {
        Gaussian { re, im: T::zero() }
    }

    pub fn i() -> Self {
        Gaussian { re: T::zero(), im: T::one() }
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -self.im.clone() }
    }

    /// re² + im²
    pub fn norm_sqr(&self) -> T {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, k: &T) -> Self {
        Gaussian { re: self.re.clone() * k.clone(), im: self.im.clone() * k.clone() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl<T: Field> Gaussian<T> {
    /// Multiplicative inverse; `None` at zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(Gaussian { re: self.re.clone() / n.clone(), im: -self.im.clone() / n })
    }

    /// Integer power, negative exponents allowed for nonzero bases.
    pub fn powi(&self, e: i32) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u32))
        } else {
            self.inv().map(|z| z.pow(e.unsigned_abs()))
        }
    }
}

impl<T: Ring> Add for Gaussian<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Gaussian { re: self.re + o.re, im: self.im + o.im }
    }
}

impl<T: Ring> Sub for Gaussian<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Gaussian { re: self.re - o.re, im: self.im - o.im }
    }
}

impl<T: Ring> Mul for Gaussian<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let re = self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone();
        let im = self.re * o.im + self.im * o.re;
        Gaussian { re, im }
    }
}

impl<T: Field> Div for Gaussian<T> {
    type Output = Self;
    /// Panics on division by zero, like the scalar types it wraps.
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("Gaussian division by zero")
    }
}

impl<T: Ring> Neg for Gaussian<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Gaussian { re: -self.re, im: -self.im }
    }
}

impl<T: Ring> Zero for Gaussian<T> {
    fn zero() -> Self {
        Gaussian { re: T::zero(), im: T::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<T: Ring> One for Gaussian<T> {
    fn one() -> Self {
        Gaussian { re: T::one(), im: T::zero() }
    }
}

impl<T: OrderedField> HermitianScalar for Gaussian<T> {
    type Real = T;

    fn conj(&self) -> Self {
        Gaussian::conj(self)
    }
    fn real_part(&self) -> T {
        self.re.clone()
    }
    fn from_real(r: T) -> Self {
        Gaussian::from_real(r)
    }
    fn norm_sqr(&self) -> T {
        Gaussian::norm_sqr(self)
    }
}

impl<T: fmt::Display + Ring + PartialOrd> fmt::Display for Gaussian<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im < T::zero() {
            write!(f, "{} - {}i", self.re, -self.im.clone())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}
