//! Knot invariants read off a Seifert matrix.
//!
//! Conventions: `Δ(x) = det(xS − x⁻¹Sᵀ)`, so `Δ` is a symmetric Laurent
//! polynomial in `x²` with `Δ(1) = det(S − Sᵀ) = 1`. Tristram–Levine
//! signatures are signatures of `H(ω) = (1−ω)S + (1−ω̄)Sᵀ`, and
//!
//! ```text
//! det H(ω) = (2(Re ω − 1))^g · Δ(ω^{1/2}),   Δ(ω^{1/2}) := ω^{−g} det(ωS − Sᵀ)
//! ```
//!
//! for a `2g × 2g` matrix, which is what ties singular points of the form to
//! unit-circle roots of `Δ`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{isolate_all, rat, AlgebraError, IsolatingInterval, Matrix, Polynomial};
use crate::{CirclePoint, GaussianMatrix, GaussianRational, IntMatrix, Laurent, Rational, RationalPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("Seifert matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("Seifert matrix must have even size, got {0}")]
    OddSize(usize),
    #[error("det(S - S^T) = {0}, expected 1")]
    NotUnimodular(BigInt),
    #[error("the form at omega = 1 is identically zero")]
    OmegaIsOne,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Square integer matrix `S` of even size with `det(S − Sᵀ) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    m: IntMatrix,
}

impl SeifertMatrix {
    pub fn new(m: IntMatrix) -> Result<Self, SeifertError> {
        if !m.is_square() {
            return Err(SeifertError::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        if m.rows() % 2 != 0 {
            return Err(SeifertError::OddSize(m.rows()));
        }
        let skew = Matrix::from_fn(m.rows(), m.rows(), |i, j| BigInt::from(m[(i, j)]) - BigInt::from(m[(j, i)]));
        let d = skew.determinant();
        if !d.is_one() {
            return Err(SeifertError::NotUnimodular(d));
        }
        Ok(SeifertMatrix { m })
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, SeifertError> {
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != c) || (rows.len() != c) {
            return Err(SeifertError::NotSquare { rows: rows.len(), cols: c });
        }
        Self::new(Matrix::from_rows(rows))
    }

    /// The 0×0 matrix of the unknot.
    pub fn empty() -> Self {
        SeifertMatrix { m: Matrix::zeros(0, 0) }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn size(&self) -> usize {
        self.m.rows()
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn to_rational(&self) -> Matrix<Rational> {
        self.m.map(|&x| rat(x))
    }

    fn to_gaussian(&self) -> GaussianMatrix {
        self.m.map(|&x| GaussianRational::from_real(rat(x)))
    }
}

/// Alexander polynomial `det(xS − x⁻¹Sᵀ) = x^{−2g}·det(x²S − Sᵀ)`.
pub fn alexander(s: &SeifertMatrix) -> Laurent {
    let n = s.size();
    let m = s.matrix();
    // entries of yS − Sᵀ as polynomials in y = x²
    let pm = Matrix::from_fn(n, n, |i, j| Polynomial::new(vec![rat(-m[(j, i)]), rat(m[(i, j)])]));
    let d = pm.determinant();
    Laurent::from_terms(d.coeffs().iter().enumerate().map(|(k, c)| (2 * k as i32 - n as i32, c.clone())))
}

/// `|det(S + Sᵀ)|`, cross-checked against `|Δ(i)|`.
pub fn knot_determinant(s: &SeifertMatrix) -> Result<BigInt, SeifertError> {
    let m = s.matrix();
    let sym = Matrix::from_fn(s.size(), s.size(), |i, j| BigInt::from(m[(i, j)] + m[(j, i)]));
    let d = sym.determinant().abs();
    let at_i = alexander(s).eval(&GaussianRational::i())?;
    if !at_i.im.is_zero() || !at_i.re.is_integer() || at_i.re.to_integer().abs() != d {
        return Err(SeifertError::Inconsistent(format!("|det(S+S^T)| = {d} but Delta(i) = {at_i}")));
    }
    Ok(d)
}

/// Hermitian Gaussian-rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianForm {
    m: GaussianMatrix,
}

impl HermitianForm {
    pub fn new(m: GaussianMatrix) -> Result<Self, SeifertError> {
        if !m.is_hermitian() {
            return Err(SeifertError::NotHermitian);
        }
        Ok(HermitianForm { m })
    }

    pub fn matrix(&self) -> &GaussianMatrix {
        &self.m
    }

    pub fn size(&self) -> usize {
        self.m.rows()
    }

    pub fn determinant(&self) -> GaussianRational {
        self.m.determinant()
    }
}

/// `(1−ω)S + (1−ω̄)Sᵀ`
pub fn hermitian_form(s: &SeifertMatrix, omega: &CirclePoint) -> HermitianForm {
    let w = omega.value();
    let a = GaussianRational::one() - w.clone();
    let b = a.conj();
    let g = s.to_gaussian();
    let m = Matrix::from_fn(s.size(), s.size(), |i, j| a.clone() * g[(i, j)].clone() + b.clone() * g[(j, i)].clone());
    HermitianForm { m }
}

/// `Δ(ω^{1/2})` as `ω^{−g}·det(ωS − Sᵀ)`; no square root is ever taken.
pub fn half_angle_alexander(s: &SeifertMatrix, omega: &CirclePoint) -> GaussianRational {
    let w = omega.value();
    let g = s.to_gaussian();
    let m = Matrix::from_fn(s.size(), s.size(), |i, j| w.clone() * g[(i, j)].clone() - g[(j, i)].clone());
    let inv = w.inv().expect("unit-circle point is nonzero");
    inv.pow(s.genus() as u32) * m.determinant()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureValue {
    /// Signature; for averaged values at singular points this may in
    /// principle be a half-integer.
    pub value: Rational,
    pub nullity: usize,
    pub singular: bool,
}

impl SignatureValue {
    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        if self.value.is_integer() {
            i64::try_from(self.value.to_integer()).ok()
        } else {
            None
        }
    }
}

/// Exact signature by congruence diagonalization. At a singular form this is
/// the sign count over the nonzero eigenvalues.
pub fn signature_exact(h: &HermitianForm) -> SignatureValue {
    let inertia = h.matrix().inertia();
    SignatureValue { value: rat(inertia.signature()), nullity: inertia.zero, singular: inertia.zero > 0 }
}

/// The cosine form `G` of `Δ`, with `Δ(e^{it/2}) = G(cos t)`.
pub fn alexander_cosine(s: &SeifertMatrix) -> RationalPolynomial {
    alexander(s).even_to_cosine().expect("Alexander polynomials are symmetric in x^2")
}

/// `N(u) = (1+u²)^g · G((1−u²)/(1+u²))`.
///
/// With `det H(ω(u)) = (−4u²)^g N(u) / (1+u²)^{2g}`, the nonzero real roots
/// of the numerator of `det H` are exactly the roots of `N`; `N(0) = Δ(1) = 1`.
pub fn circle_polynomial(s: &SeifertMatrix) -> RationalPolynomial {
    let g = s.genus() as u32;
    let cos = alexander_cosine(s);
    let one_minus = Polynomial::new(vec![rat(1), rat(0), rat(-1)]);
    let one_plus = Polynomial::new(vec![rat(1), rat(0), rat(1)]);
    cos.coeffs()
        .iter()
        .enumerate()
        .fold(Polynomial::zero(), |acc, (k, c)| {
            acc + (one_minus.pow(k as u32) * one_plus.pow(g - k as u32)).scale(c)
        })
}

/// Where `H(ω)` degenerates on the circle minus `ω = 1`.
#[derive(Clone, Debug)]
pub struct CircleSingularities {
    /// Isolating intervals for the singular `u`, left to right.
    pub parameters: Vec<IsolatingInterval>,
    /// Whether `ω = −1` is singular, i.e. `Δ(i) = 0`.
    pub at_minus_one: bool,
    /// The polynomial `N(u)` the intervals isolate roots of.
    pub polynomial: RationalPolynomial,
}

impl CircleSingularities {
    /// Index of the interval whose root is exactly `u`.
    pub fn position(&self, u: &Rational) -> Option<usize> {
        self.parameters.iter().position(|iv| iv.is_root(u))
    }
}

pub fn alexander_circle_singularities(s: &SeifertMatrix) -> Result<CircleSingularities, SeifertError> {
    let n = circle_polynomial(s);
    if n.is_zero() {
        return Err(SeifertError::Inconsistent("det H(omega) vanishes identically".into()));
    }
    let parameters = isolate_all(&n)?;
    let at_minus_one = alexander(s).eval(&GaussianRational::i())?.is_zero();
    Ok(CircleSingularities { parameters, at_minus_one, polynomial: n })
}

/// Tristram–Levine signature `σ_ω`, averaging the one-sided limits where the
/// form is singular.
///
/// The one-sided samples are the endpoints of the isolating interval of the
/// singular parameter, so no other singularity lies between a sample and `ω`.
pub fn sigma(s: &SeifertMatrix, omega: &CirclePoint) -> Result<SignatureValue, SeifertError> {
    if omega.is_one() {
        return Err(SeifertError::OmegaIsOne);
    }
    let at = signature_exact(&hermitian_form(s, omega));
    if !at.singular {
        return Ok(at);
    }
    let sing = alexander_circle_singularities(s)?;
    let (left, right) = match omega {
        CirclePoint::Infinity => {
            // u → +∞ and u → −∞ both approach −1
            match (sing.parameters.first(), sing.parameters.last()) {
                (Some(first), Some(last)) => (nonzero_or(first.lo().clone(), -rat(1)), nonzero_or(last.hi().clone(), rat(1))),
                _ => (rat(-1), rat(1)),
            }
        }
        CirclePoint::Finite(u) => {
            let k = sing
                .position(u)
                .ok_or_else(|| SeifertError::Inconsistent(format!("form singular at u = {u} but N(u) != 0")))?;
            let iv = &sing.parameters[k];
            let half = |x: &Rational| (x + u) / rat(2);
            let lo = if iv.lo().is_zero() { half(iv.lo()) } else { iv.lo().clone() };
            let hi = if iv.hi().is_zero() { half(iv.hi()) } else { iv.hi().clone() };
            (lo, hi)
        }
    };
    let mut total = Rational::zero();
    for u in [left, right] {
        let v = signature_exact(&hermitian_form(s, &CirclePoint::Finite(u.clone())));
        if v.singular {
            return Err(SeifertError::Inconsistent(format!("sample u = {u} is singular")));
        }
        total += v.value;
    }
    Ok(SignatureValue { value: total / rat(2), nullity: at.nullity, singular: true })
}

fn nonzero_or(x: Rational, fallback: Rational) -> Rational {
    if x.is_zero() {
        fallback
    } else {
        x
    }
}

/// Block sum `S₁ ⊕ S₂`, a Seifert matrix for the connected sum.
pub fn connected_sum(a: &SeifertMatrix, b: &SeifertMatrix) -> SeifertMatrix {
    SeifertMatrix { m: a.matrix().block_diag(b.matrix()) }
}

/// `−Sᵀ`, the Seifert matrix of the reversed mirror image.
pub fn mirror(s: &SeifertMatrix) -> SeifertMatrix {
    SeifertMatrix { m: s.matrix().transpose().map(|&x| -x) }
}

/// A singular parameter where `σ` actually jumps.
#[derive(Clone, Debug)]
pub struct Breakpoint {
    pub parameter: IsolatingInterval,
    /// Averaged `σ` at the point itself.
    pub sigma: Rational,
}

/// `σ` as a step function of the half-angle tangent `u ∈ ℝ`.
///
/// `sigmas[k]` holds between `breakpoints[k−1]` and `breakpoints[k]`, with
/// `−∞` and `+∞` at the ends. Adjacent values always differ.
#[derive(Clone, Debug)]
pub struct SignatureProfile {
    pub breakpoints: Vec<Breakpoint>,
    pub sigmas: Vec<i64>,
}

/// A nonzero rational strictly between two disjoint isolated roots (or
/// beyond the only one), where `H` is nonsingular.
fn sample_between(left: Option<&mut IsolatingInterval>, right: Option<&mut IsolatingInterval>) -> Rational {
    match (left, right) {
        (None, None) => rat(1),
        (Some(l), None) => l.hi().clone().max(Rational::zero()) + rat(1),
        (None, Some(r)) => r.lo().clone().min(Rational::zero()) - rat(1),
        (Some(l), Some(r)) => loop {
            if let Some(x) = [l.hi(), r.lo()].into_iter().find(|x| !x.is_zero()) {
                break x.clone();
            }
            l.bisect();
            r.bisect();
        },
    }
}

/// The step function of `σ` on the circle, with breakpoints refined to
/// `width` and steps of equal value merged.
pub fn signature_profile(s: &SeifertMatrix, width: &Rational) -> Result<SignatureProfile, SeifertError> {
    let mut params = alexander_circle_singularities(s)?.parameters;
    for iv in &mut params {
        iv.refine_to(width);
    }
    let mut sigmas = Vec::with_capacity(params.len() + 1);
    for k in 0..=params.len() {
        let (before, after) = params.split_at_mut(k);
        let u = sample_between(before.last_mut(), after.first_mut());
        let v = signature_exact(&hermitian_form(s, &CirclePoint::Finite(u.clone())));
        if v.singular {
            return Err(SeifertError::Inconsistent(format!("sample u = {u} is singular")));
        }
        sigmas.push(v.as_integer().expect("nonsingular signature is an integer"));
    }
    let mut out = SignatureProfile { breakpoints: Vec::new(), sigmas: vec![sigmas[0]] };
    for (k, iv) in params.into_iter().enumerate() {
        if sigmas[k + 1] == sigmas[k] {
            continue;
        }
        let sigma = Rational::from_integer((sigmas[k] + sigmas[k + 1]).into()) / rat(2);
        out.breakpoints.push(Breakpoint { parameter: iv, sigma });
        out.sigmas.push(sigmas[k + 1]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::from_rows(vec![vec![-1, 1], vec![0, -1]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(matches!(SeifertMatrix::from_rows(vec![vec![1, 2, 3]]), Err(SeifertError::NotSquare { .. })));
        assert!(matches!(SeifertMatrix::from_rows(vec![vec![1]]), Err(SeifertError::OddSize(1))));
        assert!(matches!(
            SeifertMatrix::from_rows(vec![vec![1, 2], vec![0, 1]]),
            Err(SeifertError::NotUnimodular(_))
        ));
        assert_eq!(SeifertMatrix::empty().size(), 0);
    }

    #[test]
    fn trefoil_alexander() {
        let d = alexander(&trefoil());
        assert_eq!(d, Laurent::from_terms([(2, rat(1)), (0, rat(-1)), (-2, rat(1))]));
        assert_eq!(alexander(&SeifertMatrix::empty()), Laurent::one());
    }

    #[test]
    fn trefoil_determinant() {
        assert_eq!(knot_determinant(&trefoil()).unwrap(), BigInt::from(3));
        let two = connected_sum(&trefoil(), &trefoil());
        assert_eq!(knot_determinant(&two).unwrap(), BigInt::from(9));
        assert_eq!(knot_determinant(&mirror(&trefoil())).unwrap(), BigInt::from(3));
    }

    #[test]
    fn forms_at_special_points() {
        let s = trefoil();
        let h1 = hermitian_form(&s, &CirclePoint::one());
        assert!(h1.matrix().iter_rows().flatten().all(Zero::is_zero));
        let hm = hermitian_form(&s, &CirclePoint::Infinity);
        let sym = (&s.to_gaussian() + &s.to_gaussian().transpose()).scale(&GaussianRational::from_real(rat(2)));
        assert_eq!(hm.matrix(), &sym);
        // ω = i: (1−i)S + (1+i)Sᵀ
        let hi = hermitian_form(&s, &CirclePoint::Finite(rat(1)));
        let g = |a, b| GaussianRational::new(rat(a), rat(b));
        let expected = Matrix::from_rows(vec![vec![g(-2, 0), g(1, -1)], vec![g(1, 1), g(-2, 0)]]);
        assert_eq!(hi.matrix(), &expected);
    }

    #[test]
    fn trefoil_signatures() {
        let s = trefoil();
        assert_eq!(sigma(&s, &CirclePoint::Infinity).unwrap().value, rat(-2));
        // near ω = 1 the form is ±i(S − Sᵀ)-like and has signature 0
        assert_eq!(sigma(&s, &CirclePoint::Finite(ratio(1, 10))).unwrap().value, rat(0));
        assert_eq!(sigma(&s, &CirclePoint::one()), Err(SeifertError::OmegaIsOne));
    }

    #[test]
    fn trefoil_singularities_are_sixth_roots() {
        // 2cos t = 1 ⇒ t = ±π/3 ⇒ u = tan(t/2) = ±1/√3, roots of 3u² − 1
        let sing = alexander_circle_singularities(&trefoil()).unwrap();
        assert!(!sing.at_minus_one);
        assert_eq!(sing.parameters.len(), 2);
        let target = Polynomial::new(vec![rat(-1), rat(0), rat(3)]);
        for iv in &sing.parameters {
            assert_eq!(iv.sign_of(&target), 0);
        }
    }

    #[test]
    fn averaged_sigma_at_root() {
        // the jump at a simple root is 2, so the average sits halfway
        let s = trefoil();
        let sing = alexander_circle_singularities(&s).unwrap();
        assert!(sing.parameters.iter().all(|iv| iv.polynomial().degree() == Some(2)));
        let f = connected_sum(&s, &mirror(&s));
        let v = sigma(&f, &CirclePoint::Finite(ratio(1, 3))).unwrap();
        assert_eq!(v.value, rat(0));
        assert!(!v.singular);
    }

    #[test]
    fn trefoil_profile() {
        let p = signature_profile(&trefoil(), &ratio(1, 1000)).unwrap();
        assert_eq!(p.sigmas, vec![-2, 0, -2]);
        assert_eq!(p.breakpoints.len(), 2);
        assert!(p.breakpoints.iter().all(|b| b.sigma == rat(-1) && b.parameter.width() <= ratio(1, 1000)));
        let f = connected_sum(&trefoil(), &mirror(&trefoil()));
        let p = signature_profile(&f, &ratio(1, 10)).unwrap();
        assert_eq!(p.sigmas, vec![0]);
        assert!(p.breakpoints.is_empty());
    }
}
