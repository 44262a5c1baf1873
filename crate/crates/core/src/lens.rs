//! Lens spaces, their plumbing lattices, and the definite-embedding
//! obstruction to bounding rational homology balls.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::{embed, EmbeddingWitness, FormSign, IntegralLattice};
use crate::{Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LensError {
    #[error("L({p},{q}) needs p > q > 0")]
    OutOfRange { p: u64, q: u64 },
    #[error("L({p},{q}) needs gcd(p, q) = 1")]
    NotCoprime { p: u64, q: u64 },
    #[error("empty continued fraction")]
    EmptyFraction,
    #[error("continued fraction tail starting at entry {position} evaluates to zero")]
    ZeroTail { position: usize },
    #[error("cannot parse lens sum: {0}")]
    Parse(String),
    #[error("|H_1| = {product} but the plumbing lattice has |det| = {det}")]
    OrderMismatch { product: Integer, det: Integer },
}

/// `L(p, q)` with `p > q > 0` coprime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    pub fn new(p: u64, q: u64) -> Result<Self, LensError> {
        if !(p > q && q > 0) {
            return Err(LensError::OutOfRange { p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(LensError::NotCoprime { p, q });
        }
        Ok(LensSpace { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `L(p, p − q) ≅ −L(p, q)`.
    pub fn dual(&self) -> Self {
        LensSpace { p: self.p, q: self.p - self.q }
    }

    /// `p/q = [a₁, …, a_n]⁻` with every `aᵢ ≥ 2`.
    pub fn continued_fraction(&self) -> Vec<i64> {
        let (mut p, mut q) = (self.p, self.q);
        let mut out = Vec::new();
        while q != 0 {
            let a = p.div_ceil(q);
            out.push(a as i64);
            (p, q) = (q, a * q - p);
        }
        out
    }

    /// The negative definite chain lattice `Γ_{p,q}`.
    pub fn plumbing_lattice(&self) -> IntegralLattice {
        let a = self.continued_fraction();
        let n = a.len();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => -a[i],
                        1 => 1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        IntegralLattice::from_rows(rows).expect("chain gram is symmetric")
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

impl FromStr for LensSpace {
    type Err = LensError;

    fn from_str(s: &str) -> Result<Self, LensError> {
        let bad = || LensError::Parse(format!("expected L(p,q), got `{}`", s.trim()));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix(['L', 'l'])
            .and_then(|r| r.strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (p, q) = inner.split_once(',').ok_or_else(bad)?;
        LensSpace::new(p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?)
    }
}

pub fn cf_expand(p: u64, q: u64) -> Result<Vec<i64>, LensError> {
    Ok(LensSpace::new(p, q)?.continued_fraction())
}

/// `[a₁, …, a_n]⁻ = a₁ − 1/(a₂ − 1/(⋯ − 1/a_n))`.
pub fn cf_evaluate(a: &[i64]) -> Result<Rational, LensError> {
    let (last, rest) = a.split_last().ok_or(LensError::EmptyFraction)?;
    let mut v = Rational::from_integer((*last).into());
    for (i, x) in rest.iter().enumerate().rev() {
        if v.is_zero() {
            return Err(LensError::ZeroTail { position: i + 2 });
        }
        v = Rational::from_integer((*x).into()) - v.recip();
    }
    Ok(v)
}

/// `♯ᵢ L(pᵢ, qᵢ)`, nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LensSum {
    summands: Vec<LensSpace>,
}

impl LensSum {
    pub fn new(summands: Vec<LensSpace>) -> Result<Self, LensError> {
        if summands.is_empty() {
            return Err(LensError::Parse("empty connected sum".into()));
        }
        Ok(LensSum { summands })
    }

    pub fn summands(&self) -> &[LensSpace] {
        &self.summands
    }

    pub fn dual(&self) -> Self {
        LensSum { summands: self.summands.iter().map(LensSpace::dual).collect() }
    }

    /// Direct sum of the summands' chain lattices.
    pub fn plumbing_lattice(&self) -> IntegralLattice {
        self.summands
            .iter()
            .fold(IntegralLattice::empty(), |acc, l| acc.direct_sum(&l.plumbing_lattice()))
    }

    /// `|H₁| = Πpᵢ`, checked against the determinant of the plumbing lattice.
    pub fn h1_order(&self) -> Result<Integer, LensError> {
        let product = self.summands.iter().fold(Integer::one(), |acc, l| acc * Integer::from(l.p));
        let det = self.plumbing_lattice().determinant().abs();
        if det != product {
            return Err(LensError::OrderMismatch { product, det });
        }
        Ok(product)
    }
}

impl fmt::Display for LensSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" # ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for LensSum {
    type Err = LensError;

    /// `L(p,q) # L(p,q) # …`; `♯` is accepted for `#`.
    fn from_str(s: &str) -> Result<Self, LensError> {
        let summands = s.split(['#', '♯']).map(str::parse).collect::<Result<Vec<_>, _>>()?;
        LensSum::new(summands)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `Γ` of the sum itself.
    Primary,
    /// `Γ` of the dual sum.
    Dual,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Primary => "primary",
            Side::Dual => "dual",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObstructionStatus {
    /// A lattice admits no embedding into the standard negative definite
    /// lattice of its rank, so the sum bounds no rational homology ball and
    /// is not rational homology cobordant to an integral homology sphere.
    /// `failed_side` is the first of `failed_sides`.
    Obstructed { failed_side: Side, failed_sides: Vec<Side> },
    /// Both lattices embed. Inconclusive.
    HypothesisHolds { primary: EmbeddingWitness, dual: EmbeddingWitness },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub status: ObstructionStatus,
    pub rank: usize,
    pub dual_rank: usize,
}

impl ObstructionVerdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self.status, ObstructionStatus::Obstructed { .. })
    }
}

fn embeds_in_own_rank(l: &IntegralLattice) -> Option<EmbeddingWitness> {
    embed(l, l.rank(), FormSign::Negative).expect("plumbing lattices are negative definite")
}

/// Runs both embedding searches (concurrently) and reports the verdict.
pub fn obstruct(s: &LensSum) -> ObstructionVerdict {
    let (lat, dual_lat) = (s.plumbing_lattice(), s.dual().plumbing_lattice());
    let (w, w_dual) = rayon::join(|| embeds_in_own_rank(&lat), || embeds_in_own_rank(&dual_lat));
    let status = match (w, w_dual) {
        (Some(primary), Some(dual)) => ObstructionStatus::HypothesisHolds { primary, dual },
        (w, w_dual) => {
            let failed_sides: Vec<Side> = [(Side::Primary, w.is_none()), (Side::Dual, w_dual.is_none())]
                .into_iter()
                .filter_map(|(side, failed)| failed.then_some(side))
                .collect();
            ObstructionStatus::Obstructed { failed_side: failed_sides[0], failed_sides }
        }
    };
    ObstructionVerdict { status, rank: lat.rank(), dual_rank: dual_lat.rank() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn sum(s: &str) -> LensSum {
        s.parse().unwrap()
    }

    #[test]
    fn continued_fractions() {
        assert_eq!(cf_expand(3, 1).unwrap(), vec![3]);
        assert_eq!(cf_expand(7, 2).unwrap(), vec![4, 2]);
        assert_eq!(cf_expand(7, 5).unwrap(), vec![2, 2, 3]);
        assert_eq!(cf_evaluate(&[2, 2, 2]).unwrap(), ratio(4, 3));
        assert_eq!(cf_evaluate(&[3]).unwrap(), rat(3));
        assert_eq!(cf_evaluate(&[4, 2]).unwrap(), ratio(7, 2));
        assert_eq!(cf_evaluate(&[]), Err(LensError::EmptyFraction));
        assert_eq!(cf_evaluate(&[2, 1, 1]), Err(LensError::ZeroTail { position: 2 }));
        assert!(matches!(cf_expand(4, 2), Err(LensError::NotCoprime { .. })));
        assert!(matches!(cf_expand(3, 3), Err(LensError::OutOfRange { .. })));
    }

    #[test]
    fn lattices() {
        assert_eq!(sum("L(3,1)").plumbing_lattice().gram().to_rows(), vec![vec![-3]]);
        let l = sum("L(7,2)").plumbing_lattice();
        assert_eq!(l.gram().to_rows(), vec![vec![-4, 1], vec![1, -2]]);
        assert_eq!(l.determinant(), Integer::from(7));
        assert_eq!(sum("L(3,1) # L(3,1)").h1_order().unwrap(), Integer::from(9));
        assert_eq!(sum("L(7,2)♯L(3,1)").h1_order().unwrap(), Integer::from(21));
        assert_eq!(sum("L(7,2)").dual(), sum("L(7,5)"));
        assert!(matches!("L(3,1) # ".parse::<LensSum>(), Err(LensError::Parse(_))));
        assert!(matches!("M(3,1)".parse::<LensSum>(), Err(LensError::Parse(_))));
    }

    #[test]
    fn small_verdicts() {
        for s in ["L(3,1)", "L(2,1)"] {
            let v = obstruct(&sum(s));
            assert!(matches!(v.status, ObstructionStatus::Obstructed { failed_side: Side::Primary, .. }), "{s}");
        }
        let s = sum("L(4,1)");
        let v = obstruct(&s);
        let ObstructionStatus::HypothesisHolds { primary, dual } = &v.status else { panic!("L(4,1) obstructed") };
        assert_eq!(primary.vectors, vec![vec![2]]);
        assert!(primary.verify(&s.plumbing_lattice()));
        assert!(dual.verify(&s.dual().plumbing_lattice()));
        assert_eq!((v.rank, v.dual_rank), (1, 3));
    }

    #[test]
    fn dual_swaps_roles() {
        let s = sum("L(3,1)");
        let v = obstruct(&s.dual());
        match v.status {
            ObstructionStatus::Obstructed { failed_sides, .. } => assert!(failed_sides.contains(&Side::Dual)),
            _ => panic!("L(3,2) should be obstructed"),
        }
    }
}
