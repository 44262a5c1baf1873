use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{Field, Ring};
use crate::Rational;

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// Trailing zeros are never stored, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading term.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

/// `n·1` in any ring, by double-and-add.
pub(crate) fn small<T: Ring>(n: i64) -> T {
    let mut acc = T::zero();
    let mut base = T::one();
    let mut k = n.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc = acc + base.clone();
        }
        base = base.clone() + base;
        k >>= 1;
    }
    if n < 0 {
        -acc
    } else {
        acc
    }
}

impl<T: Ring> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c·x^deg`
    pub fn monomial(deg: usize, c: T) -> Self {
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial::new(coeffs)
    }

    pub fn x() -> Self {
        Polynomial::monomial(1, T::one())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.clone() * small::<T>(i as i64)).collect(),
        )
    }

    /// `self(q(x))`
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| acc * q.clone() + Self::constant(c.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Pseudo-remainder `lc(b)^(deg a − deg b + 1)·a mod b`, computed without
    /// division. Panics if `b` is zero.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let lb = b.coeffs[db].clone();
        let mut r = self.clone();
        let Some(da) = r.degree() else { return r };
        if da < db {
            // the lc(b)^(da−db+1) factor is lc(b)^0 here
            return r;
        }
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.coeffs[dr].clone();
            let shifted = Polynomial::monomial(dr - db, lr) * b.clone();
            r = r.scale(&lb) - shifted;
            steps -= 1;
        }
        for _ in 0..steps {
            r = r.scale(&lb);
        }
        r
    }

    /// Chebyshev polynomial of the first kind, `T_k(cos t) = cos(kt)`.
    pub fn chebyshev_t(k: usize) -> Self {
        let two_x = Polynomial::monomial(1, small::<T>(2));
        let (mut prev, mut cur) = (Self::one(), Self::x());
        if k == 0 {
            return prev;
        }
        for _ in 1..k {
            let next = two_x.clone() * cur.clone() - prev;
            prev = cur;
            cur = next;
        }
        cur
    }
}

impl<T: Field> Polynomial<T> {
    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        let db = b.degree().expect("polynomial division by zero");
        let lb = b.coeffs[db].clone();
        let mut q = vec![T::zero(); self.coeffs.len().saturating_sub(db)];
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let f = r.coeffs[dr].clone() / lb.clone();
            q[dr - db] = f.clone();
            r = r - Polynomial::monomial(dr - db, f) * b.clone();
        }
        (Polynomial::new(q), r)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = T::one() / l.clone();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor; zero only if both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn squarefree(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }
}

impl Polynomial<Rational> {
    /// The positive rational multiple with coprime integer coefficients and
    /// positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        Polynomial::new(ints.into_iter().map(|c| Rational::from_integer(c / &g * &sign)).collect())
    }

    /// Sign of the value at `x`: -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        let v = self.eval(x);
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Sign of the value at +∞ (`positive`) or −∞.
    pub fn sign_at_infinity(&self, positive: bool) -> i32 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = if self.coeffs[d].is_positive() { 1 } else { -1 };
                if positive || d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Cauchy bound: every real root lies strictly inside `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        let d = self.degree().unwrap_or(0);
        if d == 0 {
            return Rational::one();
        }
        let lead = self.coeffs[d].abs();
        let m = self.coeffs[..d].iter().map(|c| c.abs() / &lead).fold(Rational::zero(), |a, b| if b > a { b } else { a });
        m + Rational::from_integer(BigInt::from(2))
    }
}

impl<T: Ring> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Polynomial<T> {
    fn one() -> Self {
        Polynomial::constant(T::one())
    }
}

impl<T: Ring> Add for Polynomial<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<T: Ring> Sub for Polynomial<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl<T: Ring> Mul for Polynomial<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Ring> Neg for Polynomial<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

/// Euclidean quotient; exact in the fraction-free determinant.
impl<T: Field> Div for Polynomial<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self.div_rem(&o).0
    }
}

impl<T: Field> Rem for Polynomial<T> {
    type Output = Self;
    fn rem(self, o: Self) -> Self {
        self.div_rem(&o).1
    }
}

impl<T: Ring + fmt::Display> Polynomial<T> {
    /// Human-readable form in the named variable, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            terms.push(match k {
                0 => format!("{c}"),
                1 => format!("({c}){var}"),
                _ => format!("({c}){var}^{k}"),
            });
        }
        terms.join(" + ")
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, ratio};

    fn p(c: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn trims_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn division_identity() {
        let a = p(&[-1, 0, 3, 5, 2]);
        let b = p(&[2, -1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q * b.clone() + r.clone(), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn pseudo_remainder_is_scaled_remainder() {
        let a = p(&[-1, 0, 3, 5, 2]);
        let b = p(&[2, -1, 3]);
        let scale = rat(3).pow(3);
        assert_eq!(a.pseudo_rem(&b), a.div_rem(&b).1.scale(&scale));
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let f = p(&[2, -3, 0, 1]);
        assert_eq!(f.gcd(&f.derivative()), p(&[-1, 1]));
        assert_eq!(f.squarefree().monic(), p(&[-2, 1, 1]));
    }

    #[test]
    fn chebyshev() {
        assert_eq!(Polynomial::<Rational>::chebyshev_t(2), p(&[-1, 0, 2]));
        assert_eq!(Polynomial::<Rational>::chebyshev_t(3), p(&[0, -3, 0, 4]));
        // T_k(1) = 1 and T_k(-1) = (-1)^k
        for k in 0..10 {
            let t = Polynomial::<Rational>::chebyshev_t(k);
            assert_eq!(t.eval(&rat(1)), rat(1));
            assert_eq!(t.eval(&rat(-1)), rat(if k % 2 == 0 { 1 } else { -1 }));
        }
    }

    #[test]
    fn primitive_part() {
        let f = Polynomial::new(vec![ratio(-1, 2), rat(0), ratio(-3, 4)]);
        assert_eq!(f.primitive(), p(&[2, 0, 3]));
    }

    #[test]
    fn compose_and_root_bound() {
        let f = p(&[-2, 0, 1]);
        let g = p(&[1, 1]);
        assert_eq!(f.compose(&g), p(&[-1, 2, 1]));
        let b = p(&[-100, 0, 1]).root_bound();
        assert!(b > rat(10));
    }
}
