//! The sequence `ω_l → −1` on which `K_m` jumps exactly when `m ≥ l`.
//!
//! Everything is done in the variable `c = cos t`. On the window
//! `c ∈ [−1, c*)` the function `G = G_num/G_den` is continuous and strictly
//! decreasing (so `g(t) = G(cos t)` increases towards `t = π`), `G(−1) = 1`,
//! and `G_den > 0`. There `t_l` is the unique `c_l` with `G(c_l) = 1 − 1/l`,
//! and `s_l` is a rational half-angle tangent `u` whose `c(u)` lies strictly
//! between `c_l` and `c_{l−1}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{g_as_polynomial, KnError};
use crate::algebra::{isolate, IsolatingInterval, SturmSequence};
use crate::{CirclePoint, Rational, RationalPolynomial};

/// Cap on the search for `l0`.
const L0_SEARCH_LIMIT: u64 = 100_000;

/// Right end `c*` of the window.
#[derive(Clone, Debug)]
pub enum WindowEnd {
    /// `G` is monotone on all of `[−1, 1)`.
    Exact(Rational),
    /// First root beyond −1 of `G′`'s numerator or of `G_den`.
    Root(IsolatingInterval),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindowKind {
    /// `G_den` vanishes at `c*`; `G → −∞` there and the image is unbounded below.
    Pole,
    /// `G′` vanishes at `c*`.
    Critical,
    /// No obstruction inside `(−1, 1)`.
    Whole,
}

/// The maximal half-open window `[−1, c*)` in `c = cos t`, i.e. the angles
/// `(π − ε, π]`.
#[derive(Clone, Debug)]
pub struct Window {
    pub end: WindowEnd,
    pub kind: WindowKind,
}

impl Window {
    /// Is `c` strictly left of `c*`? Exact; no refinement needed.
    pub fn contains(&self, c: &Rational) -> bool {
        if c < &-Rational::one() {
            return false;
        }
        match &self.end {
            WindowEnd::Exact(e) => c < e,
            WindowEnd::Root(iv) => iv.cmp_root(c) == Ordering::Greater,
        }
    }

    /// Rational bracket `(lo, hi)` around `c*` (degenerate when exact).
    pub fn end_bracket(&self) -> (Rational, Rational) {
        match &self.end {
            WindowEnd::Exact(e) => (e.clone(), e.clone()),
            WindowEnd::Root(iv) => (iv.lo().clone(), iv.hi().clone()),
        }
    }

    /// Approximate `ε` in radians.
    pub fn approx_epsilon(&self) -> f64 {
        let c = match &self.end {
            WindowEnd::Exact(e) => crate::algebra::to_f64(e),
            WindowEnd::Root(iv) => {
                let mut iv = iv.clone();
                iv.refine_to(&Rational::new(1.into(), (1u64 << 40).into()));
                iv.approx()
            }
        };
        std::f64::consts::PI - c.clamp(-1.0, 1.0).acos()
    }

    /// The root of `p` in `(−1, c*)`, if any. `p` must have at most one.
    fn root_inside(&self, p: &RationalPolynomial) -> Option<IsolatingInterval> {
        let minus_one = -Rational::one();
        match &self.end {
            WindowEnd::Exact(e) => isolate(p, &minus_one, e)
                .ok()?
                .into_iter()
                .find(|iv| iv.cmp_root(&minus_one) == Ordering::Greater && iv.cmp_root(e) == Ordering::Less),
            WindowEnd::Root(end) => {
                let mut end = end.clone();
                let sq = p.squarefree();
                let sturm = SturmSequence::new(&sq);
                let shares_end = end.sign_of(p) == 0;
                loop {
                    let a = end.lo().clone();
                    let found = isolate(p, &minus_one, &a).ok()?.into_iter().find(|iv| {
                        iv.cmp_root(&minus_one) == Ordering::Greater && iv.cmp_root(&a) != Ordering::Greater
                    });
                    if found.is_some() {
                        return found;
                    }
                    let inside = sturm.count_open(end.lo(), end.hi());
                    if inside == 0 || (shares_end && inside == 1) {
                        return None;
                    }
                    end.bisect();
                }
            }
        }
    }
}

/// `G_num − (1 − 1/l)·G_den`, whose root in the window is `c_l`.
fn level_polynomial(l: u64) -> RationalPolynomial {
    let (num, den) = g_as_polynomial();
    let level = Rational::one() - Rational::new(1.into(), l.into());
    num - den.scale(&level)
}

/// Exact monotonicity window of `G` at `c = −1`.
pub fn monotonicity_window() -> Result<Window, KnError> {
    let (num, den) = g_as_polynomial();
    let minus_one = -Rational::one();
    let deriv = num.derivative() * den.clone() - num * den.derivative();
    if den.sign_at(&minus_one) <= 0 || deriv.sign_at(&minus_one) >= 0 {
        return Err(KnError::EmptyWindow);
    }
    let w = deriv.clone() * den.clone();
    let first = isolate(&w, &minus_one, &Rational::one())?
        .into_iter()
        .find(|iv| iv.cmp_root(&minus_one) == Ordering::Greater && iv.cmp_root(&Rational::one()) == Ordering::Less);
    Ok(match first {
        None => Window { end: WindowEnd::Exact(Rational::one()), kind: WindowKind::Whole },
        Some(mut iv) => {
            iv.refine_to(&Rational::new(1.into(), (1u64 << 20).into()));
            let kind = if iv.sign_of(&den) == 0 { WindowKind::Pole } else { WindowKind::Critical };
            Window { end: WindowEnd::Root(iv), kind }
        }
    })
}

/// `cos t` of the half-angle tangent `u`.
fn cos_of(u: &Rational) -> Rational {
    let u2 = u * u;
    (Rational::one() - &u2) / (Rational::one() + u2)
}

#[derive(Clone, Debug)]
pub struct OmegaEntry {
    /// Isolates `c_l = cos t_l`, the root of `G_num − (1−1/l)G_den` in the window.
    pub t_interval: Option<IsolatingInterval>,
    /// `ω_l = e^{is_l}`; present for `l > l0`.
    pub s_point: Option<CirclePoint>,
}

#[derive(Clone, Debug)]
pub struct OmegaSequence {
    pub l0: u64,
    pub l_max: u64,
    pub window: Window,
    pub entries: BTreeMap<u64, OmegaEntry>,
}

impl OmegaSequence {
    /// `ω_l` for `l0 < l ≤ l_max`.
    pub fn omega(&self, l: u64) -> Result<&CirclePoint, KnError> {
        self.entries.get(&l).and_then(|e| e.s_point.as_ref()).ok_or(KnError::MissingOmega(l))
    }

    pub fn t_interval(&self, l: u64) -> Option<&IsolatingInterval> {
        self.entries.get(&l).and_then(|e| e.t_interval.as_ref())
    }

    /// Re-derives the placement of `s_l` from interval endpoints alone:
    /// the neighbouring roots are refined to `width`, then further until
    /// `c_l < cos s_l < c_{l−1}` (or `< c*`) is decided by a rational
    /// comparison. False if it fails.
    pub fn certify(&self, l: u64, width: &Rational) -> bool {
        let Ok(CirclePoint::Finite(u)) = self.omega(l) else { return false };
        let c = cos_of(u);
        let Some(lower) = self.t_interval(l) else { return false };
        let upper = match (self.t_interval(l - 1), &self.window.end) {
            (Some(iv), _) | (None, WindowEnd::Root(iv)) => iv,
            (None, WindowEnd::Exact(e)) => return below_endpoints(lower, &c, width, true) && &c < e,
        };
        below_endpoints(lower, &c, width, true) && below_endpoints(upper, &c, width, false)
    }
}

/// With `root_below`, certifies root < `c`; otherwise `c` < root.
fn below_endpoints(iv: &IsolatingInterval, c: &Rational, width: &Rational, root_below: bool) -> bool {
    let mut iv = iv.clone();
    iv.refine_to(width);
    // c is never the root itself, so bisection eventually clears it
    for _ in 0..4096 {
        if root_below && iv.hi() <= c {
            return true;
        }
        if !root_below && c <= iv.lo() {
            return true;
        }
        if (root_below && c <= iv.lo()) || (!root_below && iv.hi() <= c) || iv.is_root(c) {
            return false;
        }
        iv.bisect();
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Placement {
    TooSmall,
    Inside,
    TooLarge,
}

/// Where `u > 0` sits relative to the gap for `s_l`. Monotone in `u`.
fn classify(window: &Window, l: u64, u: &Rational) -> Placement {
    let c = cos_of(u);
    if !window.contains(&c) {
        return Placement::TooSmall;
    }
    // G_den > 0 on the window, so signs of level polynomials compare G with levels
    if level_polynomial(l).sign_at(&c) >= 0 {
        return Placement::TooLarge;
    }
    if l >= 2 && level_polynomial(l - 1).sign_at(&c) <= 0 {
        return Placement::TooSmall;
    }
    Placement::Inside
}

/// Smallest-denominator positive rational accepted by a monotone classifier,
/// by a Stern–Brocot descent with galloping runs.
fn simplest_inside(mut classify: impl FnMut(&Rational) -> Placement) -> Option<Rational> {
    use num_bigint::BigInt;
    let (mut a, mut b) = (BigInt::zero(), BigInt::one()); // lower bound a/b
    let (mut c, mut d) = (BigInt::one(), BigInt::zero()); // upper bound c/d
    for _ in 0..10_000 {
        let med = Rational::new(&a + &c, &b + &d);
        match classify(&med) {
            Placement::Inside => return Some(med),
            Placement::TooSmall => {
                // largest k with (a + k c)/(b + k d) still too small
                let probe = |k: &BigInt| Rational::new(&a + k * &c, &b + k * &d);
                let mut lo = BigInt::one();
                let mut hi = BigInt::from(2);
                while classify(&probe(&hi)) == Placement::TooSmall {
                    lo = hi.clone();
                    hi *= 2;
                }
                while &hi - &lo > BigInt::one() {
                    let mid: BigInt = (&lo + &hi) / 2;
                    if classify(&probe(&mid)) == Placement::TooSmall {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                a += &lo * &c;
                b += &lo * &d;
            }
            Placement::TooLarge => {
                let probe = |k: &BigInt| Rational::new(k * &a + &c, k * &b + &d);
                let mut lo = BigInt::one();
                let mut hi = BigInt::from(2);
                while classify(&probe(&hi)) == Placement::TooLarge {
                    lo = hi.clone();
                    hi *= 2;
                }
                while &hi - &lo > BigInt::one() {
                    let mid: BigInt = (&lo + &hi) / 2;
                    if classify(&probe(&mid)) == Placement::TooLarge {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                c = &lo * &a + &c;
                d = &lo * &b + &d;
            }
        }
    }
    None
}

/// The least positive `l` such that every level `1 − 1/m`, `m > l`, is
/// attained by `G` on the window. The levels increase towards `G(−1) = 1`,
/// so it suffices that `1 − 1/(l+1)` is.
pub fn find_l0(window: &Window) -> Result<u64, KnError> {
    (1..L0_SEARCH_LIMIT)
        .find(|&l| window.root_inside(&level_polynomial(l + 1)).is_some())
        .ok_or(KnError::L0NotFound(L0_SEARCH_LIMIT))
}

/// Builds `l0`, the `t_l` roots for `l0 ≤ l ≤ l_max` (where attained) and the
/// points `ω_l` for `l0 < l ≤ l_max`.
pub fn build_omega_sequence(l_max: u64) -> Result<OmegaSequence, KnError> {
    let window = monotonicity_window()?;
    let l0 = find_l0(&window)?;
    if l_max <= l0 {
        return Err(KnError::LmaxTooSmall { l_max, l0 });
    }
    let (_, den) = g_as_polynomial();
    let mut entries = BTreeMap::new();
    for l in l0..=l_max {
        let t_interval = window.root_inside(&level_polynomial(l));
        let s_point = if l > l0 {
            let u = simplest_inside(|u| classify(&window, l, u)).ok_or(KnError::NoPointInGap(l))?;
            let c = cos_of(&u);
            let point = CirclePoint::Finite(u);
            if den.sign_at(&c) == 0 {
                return Err(KnError::AlexanderVanishes(point));
            }
            Some(point)
        } else {
            None
        };
        entries.insert(l, OmegaEntry { t_interval, s_point });
    }
    separate_roots(&mut entries);
    Ok(OmegaSequence { l0, l_max, window, entries })
}

/// Refines neighbouring `t_l` intervals until they are disjoint.
fn separate_roots(entries: &mut BTreeMap<u64, OmegaEntry>) {
    let ls: Vec<u64> = entries.keys().copied().collect();
    for pair in ls.windows(2) {
        let (Some(mut upper), Some(mut lower)) = (
            entries[&pair[0]].t_interval.clone(),
            entries[&pair[1]].t_interval.clone(),
        ) else {
            continue;
        };
        while lower.hi() > upper.lo() {
            upper.bisect();
            lower.bisect();
        }
        entries.get_mut(&pair[0]).unwrap().t_interval = Some(upper);
        entries.get_mut(&pair[1]).unwrap().t_interval = Some(lower);
    }
}
