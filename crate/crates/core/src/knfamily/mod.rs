//! The twisted family `K_n`, `K_0 = T(3,7)`, and executable certificates for
//! its Tristram–Levine signature behaviour near `ω = −1`.
//!
//! `K_n` carries a genus-7 Seifert surface whose 14×14 Seifert matrix differs
//! from the `n = 0` one only in the bottom-right 2×2 block; the upper-left
//! 12×12 block `M` is a Seifert matrix for `T(3,7)` on its own.

mod certificates;
mod omega;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use thiserror::Error;

pub use certificates::{independence_certificate, lemma_dichotomy_grid, sigma_bar, GridCell, GridReport, IndependenceWitness};
pub use omega::{build_omega_sequence, find_l0, monotonicity_window, OmegaEntry, OmegaSequence, Window, WindowEnd, WindowKind};

use crate::algebra::{rat, AlgebraError, Matrix};
use crate::seifert::{alexander, connected_sum, mirror, SeifertError, SeifertMatrix};
use crate::{CirclePoint, Laurent, Rational, RationalPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnError {
    #[error("F is undefined at omega = 1")]
    OmegaIsOne,
    #[error("Delta_K0 vanishes at the half-angle point of omega = {0}")]
    AlexanderVanishes(CirclePoint),
    #[error("monotonicity window of g at t = pi is empty")]
    EmptyWindow,
    #[error("no l0 found below {0}")]
    L0NotFound(u64),
    #[error("l_max = {l_max} must exceed l0 = {l0}")]
    LmaxTooSmall { l_max: u64, l0: u64 },
    #[error("sequence has no omega_{0}")]
    MissingOmega(u64),
    #[error("could not place s_{0} inside its angle gap")]
    NoPointInGap(u64),
    #[error("dichotomy violated at (l, m) = ({l}, {m}): F sign {f_sign}, sigma difference {sigma_diff}")]
    DichotomyViolated { l: u64, m: u64, f_sign: i32, sigma_diff: i64 },
    #[error("F(omega_{l}, {m}) = 0")]
    FVanishes { l: u64, m: u64 },
    #[error("jump sign for m = {0} is not constant")]
    JumpSignNotConstant(u64),
    #[error("form is singular at omega_{l} (coordinate {index})")]
    SingularOmega { index: usize, l: u64 },
    #[error("combination is zero after cancellation")]
    ZeroCombination,
    #[error("index {index} is not above l0 = {l0}")]
    IndexNotAboveL0 { index: u64, l0: u64 },
    #[error("malformed combination: {0}")]
    MalformedCombo(String),
    #[error("no omega_h with h in ({0}, l_max] has sigma(K_0) != 0")]
    NoNonvanishingBaseline(u64),
    #[error("every tested omega_l gives sigma = 0")]
    AllVanish,
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

const M_ROWS: [[i64; 12]; 12] = [
    [-1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [1, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0],
    [0, 1, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0],
    [0, 0, 1, -1, 0, 0, 0, 0, -1, 1, 0, 0],
    [0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 1, 0],
    [0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1],
];

/// Linking of the first basis curve with γ₂ (column 14, row 1).
const ALPHA1_GAMMA2: i64 = -1;

/// The 12×12 Seifert matrix `M` of `K_0 = T(3,7)`.
pub fn seifert_k0_form() -> SeifertMatrix {
    SeifertMatrix::new(Matrix::from_fn(12, 12, |i, j| M_ROWS[i][j])).expect("M is a valid Seifert matrix")
}

/// The 14×14 Seifert matrix `S_n` of `K_n`.
pub fn seifert_kn(n: u64) -> SeifertMatrix {
    let n = i64::try_from(n).expect("twist parameter fits in i64");
    let m = Matrix::from_fn(14, 14, |i, j| match (i, j) {
        (i, j) if i < 12 && j < 12 => M_ROWS[i][j],
        (0, 13) => ALPHA1_GAMMA2,
        (12, 12) => -n,
        (12, 13) => n,
        (13, 12) => n + 1,
        (13, 13) => -n - 1,
        _ => 0,
    });
    SeifertMatrix::new(m).expect("S_n is a valid Seifert matrix")
}

fn cached_alexander(n: u64) -> &'static Laurent {
    static K0: OnceLock<Laurent> = OnceLock::new();
    static K1: OnceLock<Laurent> = OnceLock::new();
    match n {
        0 => K0.get_or_init(|| alexander(&seifert_kn(0))),
        1 => K1.get_or_init(|| alexander(&seifert_kn(1))),
        _ => unreachable!(),
    }
}

pub fn alexander_k0() -> Laurent {
    cached_alexander(0).clone()
}

pub fn alexander_k1() -> Laurent {
    cached_alexander(1).clone()
}

/// `Δ_{K_0} + n(Δ_{K_1} − Δ_{K_0})`, the skein-relation prediction for `Δ_{K_n}`.
pub fn skein_prediction(n: u64) -> Laurent {
    let (d0, d1) = (cached_alexander(0).clone(), cached_alexander(1).clone());
    d0.clone() + (d1 - d0).scale(&Rational::from_integer(n.into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinReport {
    pub ok: bool,
    /// Number of `n` values compared, `0..=n_max`.
    pub checked: u64,
    pub first_failure: Option<u64>,
}

/// Compares `alexander(S_n)` with the skein prediction for `0 ≤ n ≤ n_max`.
pub fn skein_check(n_max: u64) -> SkeinReport {
    for n in 0..=n_max {
        if alexander(&seifert_kn(n)) != skein_prediction(n) {
            return SkeinReport { ok: false, checked: n + 1, first_failure: Some(n) };
        }
    }
    SkeinReport { ok: true, checked: n_max + 1, first_failure: None }
}

/// `F(ω, n) = 2(Re ω − 1)(1 − n + n·Δ_{K_1}(ω^{1/2})/Δ_{K_0}(ω^{1/2}))`.
///
/// The sign of `F` decides whether `σ_ω(K_n)` equals `σ_ω(K_0)` (`F < 0`)
/// or differs from it by ±2 (`F > 0`).
pub fn f_value(omega: &CirclePoint, n: u64) -> Result<Rational, KnError> {
    if omega.is_one() {
        return Err(KnError::OmegaIsOne);
    }
    let w = omega.value();
    let d0 = cached_alexander(0).eval_at_square_root(&w)?;
    let d1 = cached_alexander(1).eval_at_square_root(&w)?;
    if d0.is_zero() {
        return Err(KnError::AlexanderVanishes(omega.clone()));
    }
    let ratio = d1 / d0;
    debug_assert!(ratio.is_real(), "Delta ratio on the circle is real");
    let n = Rational::from_integer(n.into());
    let bracket = Rational::one() - &n + n * ratio.re;
    Ok(rat(2) * (w.re - Rational::one()) * bracket)
}

/// `(G_num, G_den)` in `c = cos t`, with `g(t) = G_num(cos t)/G_den(cos t)`
/// for `g(t) = Δ_{K_1}(e^{it/2})/Δ_{K_0}(e^{it/2})`.
pub fn g_as_polynomial() -> (RationalPolynomial, RationalPolynomial) {
    static G: OnceLock<(RationalPolynomial, RationalPolynomial)> = OnceLock::new();
    G.get_or_init(|| {
        let num = cached_alexander(1).even_to_cosine().expect("Delta_K1 is symmetric in x^2");
        let den = cached_alexander(0).even_to_cosine().expect("Delta_K0 is symmetric in x^2");
        (num, den)
    })
    .clone()
}

/// One knot `K_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnKnot {
    pub n: u64,
}

/// A formal integer combination `Σ αᵢ K_{nᵢ}` in the concordance group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnotCombo {
    terms: BTreeMap<u64, i64>,
}

impl KnotCombo {
    pub fn new(terms: impl IntoIterator<Item = (i64, KnKnot)>) -> Self {
        let mut out = KnotCombo::default();
        for (c, k) in terms {
            out.add_term(c, k.n);
        }
        out
    }

    pub fn knot(n: u64) -> Self {
        Self::new([(1, KnKnot { n })])
    }

    /// `J_n = K_n − K_0`.
    pub fn j(n: u64) -> Self {
        Self::new([(1, KnKnot { n }), (-1, KnKnot { n: 0 })])
    }

    fn add_term(&mut self, c: i64, n: u64) {
        let v = self.terms.get(&n).copied().unwrap_or(0) + c;
        if v == 0 {
            self.terms.remove(&n);
        } else {
            self.terms.insert(n, v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&n, &c) in &other.terms {
            out.add_term(c, n);
        }
        out
    }

    pub fn neg(&self) -> Self {
        KnotCombo { terms: self.terms.iter().map(|(&n, &c)| (n, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(n, coefficient)` pairs with nonzero coefficients, by increasing `n`.
    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.terms.iter().map(|(&n, &c)| (n, c))
    }

    /// Block sum of `|α|` copies of `S_n`, mirrored where `α < 0`.
    pub fn seifert_matrix(&self) -> SeifertMatrix {
        let mut s = SeifertMatrix::empty();
        for (n, c) in self.terms() {
            let base = seifert_kn(n);
            let piece = if c < 0 { mirror(&base) } else { base };
            for _ in 0..c.unsigned_abs() {
                s = connected_sum(&s, &piece);
            }
        }
        s
    }
}

impl fmt::Display for KnotCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (n, c)) in self.terms().enumerate() {
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if c.unsigned_abs() != 1 {
                write!(f, "{}*", c.unsigned_abs())?;
            }
            write!(f, "K{n}")?;
        }
        Ok(())
    }
}

impl FromStr for KnotCombo {
    type Err = KnError;

    /// Terms like `K5`, `2*K3`, `-3K7` or `J4` (for `K4 − K0`) joined by `+`
    /// and `-`.
    fn from_str(s: &str) -> Result<Self, KnError> {
        let bad = |msg: &str| KnError::MalformedCombo(format!("{msg} in `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty combination"));
        }
        let mut out = KnotCombo::default();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = 1i64;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                rest = r;
                sign = -1;
            } else if !first {
                return Err(bad("expected + or -"));
            }
            first = false;
            let letter_at = rest.find(['K', 'J', 'k', 'j']).ok_or_else(|| bad("missing K or J"))?;
            let coef_str = rest[..letter_at].trim_end_matches('*');
            let coef: i64 = if coef_str.is_empty() {
                1
            } else {
                coef_str.parse().map_err(|_| bad("bad coefficient"))?
            };
            let letter = rest.as_bytes()[letter_at].to_ascii_uppercase();
            let tail = &rest[letter_at + 1..];
            let digits = tail.find(|c: char| !c.is_ascii_digit()).unwrap_or(tail.len());
            let n: u64 = tail[..digits].parse().map_err(|_| bad("bad knot index"))?;
            rest = &tail[digits..];
            let term = if letter == b'J' { KnotCombo::j(n) } else { KnotCombo::knot(n) };
            for (idx, c) in term.terms() {
                out.add_term(sign * coef * c, idx);
            }
        }
        Ok(out)
    }
}
