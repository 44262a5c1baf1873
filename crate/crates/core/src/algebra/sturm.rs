//! Real root isolation by Sturm sequences.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use super::polynomial::Polynomial;
use super::AlgebraError;
use crate::algebra::to_f64;
use crate::Rational;

type Poly = Polynomial<Rational>;

/// Content-normalized Sturm sequence of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<Poly>,
}

/// Divide out the positive integer content without changing the sign.
fn normalize(p: &Poly) -> Poly {
    let prim = p.primitive();
    if p.leading().is_some_and(Signed::is_negative) {
        -prim
    } else {
        prim
    }
}

fn rat2() -> Rational {
    Rational::from_integer(2.into())
}

impl SturmSequence {
    /// Builds the sequence with pseudo-remainders, so every member stays an
    /// integer polynomial. The input should already be square-free.
    pub fn new(p: &Poly) -> Self {
        let mut seq = vec![normalize(p)];
        let d = normalize(&p.derivative());
        if d.is_zero() {
            return SturmSequence { seq };
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.degree() == Some(0) {
                break;
            }
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // prem = lc(b)^(δ+1)·rem; the Sturm member is a positive multiple of −rem
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let flips = b.leading().unwrap().is_negative() && delta % 2 == 0;
            let next = if flips { r } else { -r };
            seq.push(normalize(&next));
        }
        SturmSequence { seq }
    }

    pub fn polynomial(&self) -> &Poly {
        &self.seq[0]
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn sign_changes_at(&self, x: &Rational) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn sign_changes_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at_infinity(positive)))
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        if a >= b {
            return 0;
        }
        self.sign_changes_at(a) - self.sign_changes_at(b)
    }

    /// Distinct roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        let n = self.count_half_open(a, b);
        if a < b && self.seq[0].sign_at(b) == 0 {
            n - 1
        } else {
            n
        }
    }

    /// Distinct real roots.
    pub fn count_real(&self) -> usize {
        self.sign_changes_at_infinity(false) - self.sign_changes_at_infinity(true)
    }
}

/// An open interval `(lo, hi)` holding exactly one root of a square-free
/// polynomial, whose values at both endpoints are nonzero and of opposite
/// sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    lo: Rational,
    hi: Rational,
    poly: Poly,
    sign_lo: i32,
}

impl IsolatingInterval {
    /// Checks the defining invariant; `None` if it fails.
    pub fn new(poly: &Poly, lo: Rational, hi: Rational) -> Option<Self> {
        let poly = normalize(&poly.squarefree());
        if lo >= hi {
            return None;
        }
        let (a, b) = (poly.sign_at(&lo), poly.sign_at(&hi));
        if a == 0 || b == 0 || a == b || SturmSequence::new(&poly).count_open(&lo, &hi) != 1 {
            return None;
        }
        Some(IsolatingInterval { lo, hi, poly, sign_lo: a })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// The square-free primitive polynomial the root belongs to.
    pub fn polynomial(&self) -> &Poly {
        &self.poly
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat2()
    }

    pub fn approx(&self) -> f64 {
        (to_f64(&self.lo) + to_f64(&self.hi)) / 2.0
    }

    /// Halve the interval, keeping the root inside.
    pub fn bisect(&mut self) {
        let m = self.midpoint();
        match self.poly.sign_at(&m) {
            0 => {
                // the root is exactly m, the only root in (lo, hi)
                self.lo = (&self.lo + &m) / rat2();
                self.hi = (&m + &self.hi) / rat2();
            }
            s if s == self.sign_lo => self.lo = m,
            _ => self.hi = m,
        }
    }

    pub fn refine_to(&mut self, width: &Rational) {
        assert!(width.is_positive(), "refinement width must be positive");
        while &self.width() > width {
            self.bisect();
        }
    }

    /// Position of the root relative to `x`, decided exactly.
    pub fn cmp_root(&self, x: &Rational) -> Ordering {
        if x <= &self.lo {
            return Ordering::Greater;
        }
        if x >= &self.hi {
            return Ordering::Less;
        }
        match self.poly.sign_at(x) {
            0 => Ordering::Equal,
            s if s == self.sign_lo => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    /// Is the root exactly `x`?
    pub fn is_root(&self, x: &Rational) -> bool {
        self.cmp_root(x) == Ordering::Equal
    }

    /// Exact sign of `q` at this root.
    pub fn sign_of(&self, q: &Poly) -> i32 {
        if q.is_zero() {
            return 0;
        }
        let g = self.poly.gcd(q);
        let mut iv = self.clone();
        if g.degree().unwrap_or(0) > 0 && SturmSequence::new(&g).count_open(&iv.lo, &iv.hi) > 0 {
            // the only root of self.poly in (lo, hi) is shared with q
            return 0;
        }
        let sq = SturmSequence::new(&q.squarefree());
        while sq.count_open(&iv.lo, &iv.hi) > 0 || q.sign_at(&iv.lo) == 0 {
            iv.bisect();
        }
        q.sign_at(&iv.lo)
    }
}

/// Roots of `p` in the closed window `[lo, hi]`, as disjoint isolating
/// intervals sorted left to right.
///
/// Intervals around roots sitting exactly on a window endpoint extend past
/// it. The square-free part is taken internally.
pub fn isolate(p: &Poly, lo: &Rational, hi: &Rational) -> Result<Vec<IsolatingInterval>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if lo > hi {
        return Err(AlgebraError::EmptyWindow);
    }
    let q = normalize(&p.squarefree());
    if q.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let sturm = SturmSequence::new(&q);
    let mut out = Vec::new();
    if q.sign_at(lo) == 0 {
        out.push(around_exact_root(&q, &sturm, lo));
    }
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = sturm.count_half_open(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            if q.sign_at(&b) == 0 {
                out.push(around_exact_root(&q, &sturm, &b));
                continue;
            }
            if q.sign_at(&a) != 0 {
                let sign_lo = q.sign_at(&a);
                out.push(IsolatingInterval { lo: a, hi: b, poly: q.clone(), sign_lo });
                continue;
            }
        }
        let m = (&a + &b) / rat2();
        stack.push((m.clone(), b));
        stack.push((a, m));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    separate(&mut out);
    Ok(out)
}

/// All real roots of `p`.
pub fn isolate_all(p: &Poly) -> Result<Vec<IsolatingInterval>, AlgebraError> {
    let b = p.root_bound();
    isolate(p, &-b.clone(), &b)
}

fn around_exact_root(q: &Poly, sturm: &SturmSequence, r: &Rational) -> IsolatingInterval {
    let mut delta = Rational::one();
    loop {
        let (lo, hi) = (r - &delta, r + &delta);
        if q.sign_at(&lo) != 0 && q.sign_at(&hi) != 0 && sturm.count_open(&lo, &hi) == 1 {
            let sign_lo = q.sign_at(&lo);
            return IsolatingInterval { lo, hi, poly: q.clone(), sign_lo };
        }
        delta /= rat2();
    }
}

/// Refine neighbours until consecutive intervals no longer overlap.
fn separate(ivs: &mut [IsolatingInterval]) {
    for i in 1..ivs.len() {
        while ivs[i - 1].hi > ivs[i].lo {
            ivs[i - 1].bisect();
            ivs[i].bisect();
        }
    }
    // bisecting ivs[i] can only move its lo right, so earlier pairs stay separated
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, ratio};

    fn p(c: &[i64]) -> Poly {
        Polynomial::new(c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn sqrt_two() {
        let ivs = isolate(&p(&[-2, 0, 1]), &rat(-2), &rat(2)).unwrap();
        assert_eq!(ivs.len(), 2);
        let mut r = ivs[1].clone();
        r.refine_to(&ratio(1, 1000));
        assert!((r.approx() - 2f64.sqrt()).abs() < 1e-3);
        assert!(ivs[0].approx() < 0.0);
    }

    #[test]
    fn linear_and_empty() {
        let ivs = isolate(&p(&[1, 1]), &rat(-2), &rat(0)).unwrap();
        assert_eq!(ivs.len(), 1);
        assert_eq!(ivs[0].cmp_root(&rat(-1)), Ordering::Equal);
        assert!(isolate(&p(&[1, 0, 1]), &rat(-2), &rat(2)).unwrap().is_empty());
        assert_eq!(isolate(&p(&[]), &rat(0), &rat(1)), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn endpoint_roots_are_kept() {
        // roots at 0, 1, 2 on window [0, 2]
        let f = p(&[0, 2, -3, 1]);
        let ivs = isolate(&f, &rat(0), &rat(2)).unwrap();
        assert_eq!(ivs.len(), 3);
        for (iv, r) in ivs.iter().zip([0, 1, 2]) {
            assert!(iv.is_root(&rat(r)));
        }
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x-1)^3 (x+1)
        let f = p(&[-1, 2, 0, -2, 1]);
        assert_eq!(isolate_all(&f).unwrap().len(), 2);
        assert_eq!(SturmSequence::new(&f.squarefree()).count_real(), 2);
    }

    #[test]
    fn sign_at_algebraic_point() {
        let iv = &isolate(&p(&[-2, 0, 1]), &rat(0), &rat(2)).unwrap()[0];
        assert_eq!(iv.sign_of(&p(&[-1, 1])), 1);
        assert_eq!(iv.sign_of(&p(&[-3, 0, 0, 1])), -1);
        assert_eq!(iv.sign_of(&p(&[-4, 0, 2])), 0);
    }
}
