use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gaussian::Gaussian;
use super::polynomial::{small, Polynomial};
use super::scalar::{OrderedField, Ring};
use super::AlgebraError;

/// Finitely supported `exponent → coefficient` map; zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPolynomial<T> {
    terms: BTreeMap<i32, T>,
}

impl<T: Ring> LaurentPolynomial<T> {
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, T)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn monomial(exp: i32, c: T) -> Self {
        Self::from_terms([(exp, c)])
    }

    /// `x^shift · p(x)`
    pub fn from_polynomial(p: &Polynomial<T>, shift: i32) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (k as i32 + shift, c.clone())))
    }

    fn add_term(&mut self, e: i32, c: T) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(e, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &T)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i32) -> T {
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// `p(x⁻¹)`
    pub fn invert_variable(&self) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.invert_variable()
    }

    pub fn all_exponents_even(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Sum of coefficients, i.e. the value at `x = 1`.
    pub fn coefficient_sum(&self) -> T {
        self.terms.values().fold(T::zero(), |a, c| a + c.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e, c.clone() * k.clone())))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }
}

impl<T: OrderedField> LaurentPolynomial<T> {
    /// Exact value `Σ c·z^e` at a Gaussian point.
    pub fn eval(&self, z: &Gaussian<T>) -> Result<Gaussian<T>, AlgebraError> {
        if z.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(AlgebraError::EvaluationAtZero);
        }
        self.eval_with_exponent_map(z, |e| e)
    }

    /// `Σ c·z^(e/2)` for a Laurent polynomial in `x²`, i.e. the value at
    /// either square root of `z`. All exponents must be even.
    pub fn eval_at_square_root(&self, z: &Gaussian<T>) -> Result<Gaussian<T>, AlgebraError> {
        if !self.all_exponents_even() {
            return Err(AlgebraError::OddExponent);
        }
        if z.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(AlgebraError::EvaluationAtZero);
        }
        self.eval_with_exponent_map(z, |e| e / 2)
    }

    fn eval_with_exponent_map(&self, z: &Gaussian<T>, f: impl Fn(i32) -> i32) -> Result<Gaussian<T>, AlgebraError> {
        let inv = z.inv();
        let mut acc = Gaussian::zero();
        for (&e, c) in &self.terms {
            let k = f(e);
            let zk = if k >= 0 {
                z.pow(k as u32)
            } else {
                inv.as_ref().ok_or(AlgebraError::EvaluationAtZero)?.pow(k.unsigned_abs())
            };
            acc = acc + zk.scale(c);
        }
        Ok(acc)
    }

    /// Cosine form of a symmetric Laurent polynomial in `x²`.
    ///
    /// Returns `G` with `p(e^{it/2}) = G(cos t)`: the pair `x^{2k} + x^{-2k}`
    /// becomes `2cos(kt) = 2T_k(c)`.
    pub fn even_to_cosine(&self) -> Result<Polynomial<T>, AlgebraError> {
        if !self.all_exponents_even() {
            return Err(AlgebraError::OddExponent);
        }
        if !self.is_symmetric() {
            return Err(AlgebraError::NotSymmetric);
        }
        let mut g = Polynomial::constant(self.coeff(0));
        for (&e, c) in self.terms.range(1..) {
            let k = (e / 2) as usize;
            g = g + Polynomial::<T>::chebyshev_t(k).scale(&(c.clone() * small::<T>(2)));
        }
        Ok(g)
    }
}

impl<T: Ring> Zero for LaurentPolynomial<T> {
    fn zero() -> Self {
        LaurentPolynomial { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Ring> One for LaurentPolynomial<T> {
    fn one() -> Self {
        Self::monomial(0, T::one())
    }
}

impl<T: Ring> Add for LaurentPolynomial<T> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (e, c) in o.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<T: Ring> Sub for LaurentPolynomial<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Ring> Neg for LaurentPolynomial<T> {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPolynomial { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<T: Ring> Mul for LaurentPolynomial<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Self::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &o.terms {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<T: Ring + fmt::Display + PartialOrd> fmt::Display for LaurentPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let neg = *c < T::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{e}")?,
                _ => write!(f, "{mag}x^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;
    use crate::{GaussianRational, Laurent, Rational};

    fn lp(terms: &[(i32, i64)]) -> Laurent {
        Laurent::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn x_minus_inverse_at_i() {
        let p = lp(&[(1, 1), (-1, -1)]);
        let v = p.eval(&GaussianRational::i()).unwrap();
        assert_eq!(v, GaussianRational::new(rat(0), rat(2)));
    }

    #[test]
    fn zero_point_rejected() {
        let p = lp(&[(-1, 1)]);
        assert_eq!(p.eval(&GaussianRational::zero()), Err(AlgebraError::EvaluationAtZero));
        let q = lp(&[(0, 3), (2, 1)]);
        assert_eq!(q.eval(&GaussianRational::zero()).unwrap(), GaussianRational::from_real(rat(3)));
    }

    #[test]
    fn cosine_forms() {
        let p = lp(&[(2, 1), (-2, 1)]);
        assert_eq!(p.even_to_cosine().unwrap(), Polynomial::new(vec![rat(0), rat(2)]));
        assert_eq!(lp(&[(0, 1)]).even_to_cosine().unwrap(), Polynomial::constant(rat(1)));
        assert_eq!(lp(&[(1, 1), (-1, 1)]).even_to_cosine(), Err(AlgebraError::OddExponent));
        assert_eq!(lp(&[(2, 1), (-2, 2)]).even_to_cosine(), Err(AlgebraError::NotSymmetric));
    }

    #[test]
    fn arithmetic_cancels() {
        let p = lp(&[(3, 2), (-1, 1)]);
        assert!((p.clone() - p.clone()).is_zero());
        let q = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(q.clone() * q, lp(&[(2, 1), (0, -2), (-2, 1)]));
        let _: Rational = lp(&[(2, 1)]).coefficient_sum();
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(2, 1), (0, -1), (-2, 1)]).to_string(), "x^2 - 1 + x^-2");
    }
}
