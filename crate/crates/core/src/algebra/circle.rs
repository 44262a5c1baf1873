use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::{GaussianRational, Rational};

/// An exact point of the unit circle.
///
/// `Finite(u)` is `ω = ((1−u²) + 2ui)/(1+u²)`, the point whose half-angle
/// tangent is `u`; `Infinity` is `ω = −1`. Every rational `u` lands exactly
/// on the circle, and `u ↦ −u` is complex conjugation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum CirclePoint {
    Finite(Rational),
    Infinity,
}

impl CirclePoint {
    pub fn one() -> Self {
        CirclePoint::Finite(Rational::zero())
    }

    pub fn minus_one() -> Self {
        CirclePoint::Infinity
    }

    pub fn is_one(&self) -> bool {
        matches!(self, CirclePoint::Finite(u) if u.is_zero())
    }

    pub fn parameter(&self) -> Option<&Rational> {
        match self {
            CirclePoint::Finite(u) => Some(u),
            CirclePoint::Infinity => None,
        }
    }

    pub fn value(&self) -> GaussianRational {
        match self {
            CirclePoint::Infinity => GaussianRational::from_real(-Rational::one()),
            CirclePoint::Finite(u) => {
                let u2 = u * u;
                let den = Rational::one() + &u2;
                let two = Rational::from_integer(2.into());
                GaussianRational::new((Rational::one() - u2) / &den, two * u / den)
            }
        }
    }

    /// `Re ω = cos t`.
    pub fn cos(&self) -> Rational {
        self.value().re
    }

    pub fn conj(&self) -> Self {
        match self {
            CirclePoint::Finite(u) => CirclePoint::Finite(-u.clone()),
            CirclePoint::Infinity => CirclePoint::Infinity,
        }
    }

    /// Floating-point angle in `(−π, π]`, for display only.
    pub fn approx_angle(&self) -> f64 {
        match self {
            CirclePoint::Infinity => std::f64::consts::PI,
            CirclePoint::Finite(u) => 2.0 * crate::algebra::to_f64(u).atan(),
        }
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CirclePoint::Finite(u) => write!(f, "{u}"),
            CirclePoint::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for CirclePoint {
    type Err = String;

    /// A rational `p/q`, an integer, or `inf`.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
            return Ok(CirclePoint::Infinity);
        }
        crate::algebra::parse_rational(s).map(CirclePoint::Finite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, ratio};

    #[test]
    fn special_points() {
        assert_eq!(CirclePoint::Finite(rat(0)).value(), GaussianRational::from_real(rat(1)));
        assert_eq!(CirclePoint::Finite(rat(1)).value(), GaussianRational::i());
        assert_eq!(CirclePoint::Infinity.value(), GaussianRational::from_real(rat(-1)));
    }

    #[test]
    fn lands_on_circle() {
        for (n, d) in [(3, 7), (-5, 2), (100, 1), (1, 1000)] {
            let w = CirclePoint::Finite(ratio(n, d)).value();
            assert_eq!(w.norm_sqr(), rat(1));
        }
    }

    #[test]
    fn parse() {
        assert_eq!("inf".parse::<CirclePoint>().unwrap(), CirclePoint::Infinity);
        assert_eq!("-3/4".parse::<CirclePoint>().unwrap(), CirclePoint::Finite(ratio(-3, 4)));
        assert!("3/0".parse::<CirclePoint>().is_err());
        assert!("abc".parse::<CirclePoint>().is_err());
    }
}
