//! Trigonometric majorants and minorants of interval indicators on `[0, π]`,
//! expanded in the Chebyshev-U basis, which is orthonormal for the
//! Sato-Tate measure `(2/π) sin²θ dθ`.

mod chebyshev;
mod identity;
mod kernels;
mod polynomial;
mod verify;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use chebyshev::{chebyshev_u, chebyshev_u_all, chebyshev_u_series};
pub use identity::{fejer_integral_identity, fejer_integral_quadrature};
pub use kernels::{beurling, dirichlet, fejer, sawtooth, vaaler};
pub use polynomial::{majorant, minorant, ApproxPolynomial, Side};
pub use verify::{
    bounds_check, coefficient_bound, decay_constant, orthonormality_defect, sandwich_margin,
    BoundsCheck, CoefficientCheck, DecayCheck, SandwichResult, ScalarCheck,
};

/// A closed sub-interval `[alpha, beta]` of `[0, π]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct Interval {
    alpha: f64,
    beta: f64,
}

impl Interval {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(0.0 <= alpha && alpha <= beta && beta <= PI) {
            return Err(Error::InvalidInterval { alpha, beta });
        }
        Ok(Interval { alpha, beta })
    }

    pub fn full() -> Self {
        Interval { alpha: 0.0, beta: PI }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn length(&self) -> f64 {
        self.beta - self.alpha
    }

    pub fn contains(&self, theta: f64) -> bool {
        self.alpha <= theta && theta <= self.beta
    }

    /// The closure of `[0, π] \ I`, as at most two non-degenerate intervals.
    pub fn complement(&self) -> Vec<Interval> {
        let mut out = Vec::with_capacity(2);
        if self.alpha > 0.0 {
            out.push(Interval { alpha: 0.0, beta: self.alpha });
        }
        if self.beta < PI {
            out.push(Interval { alpha: self.beta, beta: PI });
        }
        out
    }
}

impl TryFrom<[f64; 2]> for Interval {
    type Error = Error;

    fn try_from([a, b]: [f64; 2]) -> Result<Self> {
        Interval::new(a, b)
    }
}

impl From<Interval> for [f64; 2] {
    fn from(i: Interval) -> Self {
        [i.alpha, i.beta]
    }
}

/// Sato-Tate mass of `I`: `(2/π)[(β - α)/2 - (sin 2β - sin 2α)/4]`.
pub fn mu_st(i: Interval) -> f64 {
    let (a, b) = (i.alpha, i.beta);
    2.0 / PI * ((b - a) / 2.0 - ((2.0 * b).sin() - (2.0 * a).sin()) / 4.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_adaptive;

    #[test]
    fn mu_st_examples() {
        assert!((mu_st(Interval::full()) - 1.0).abs() < 1e-15);
        assert!((mu_st(Interval::new(0.0, PI / 2.0).unwrap()) - 0.5).abs() < 1e-15);
        let small = mu_st(Interval::new(0.0, 0.1).unwrap());
        assert!((small - 2.0 / PI * (0.05 - 0.2f64.sin() / 4.0)).abs() < 1e-18);
        assert!((small - 0.000212).abs() < 5e-7);
    }

    #[test]
    fn mu_st_matches_quadrature() {
        for (a, b) in [(0.0, 0.1), (0.3, 1.1), (1.0, 3.0), (2.5, PI)] {
            let q = integrate_adaptive(a, b, |t| 2.0 / PI * t.sin().powi(2)).unwrap();
            assert!((mu_st(Interval::new(a, b).unwrap()) - q).abs() < 1e-13);
        }
    }

    #[test]
    fn interval_validation() {
        assert!(Interval::new(-0.1, 1.0).is_err());
        assert!(Interval::new(1.0, 0.5).is_err());
        assert!(Interval::new(0.0, 4.0).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
        assert!(Interval::new(1.0, 1.0).is_ok());
    }

    #[test]
    fn complement_pieces() {
        assert_eq!(Interval::full().complement(), vec![]);
        assert_eq!(Interval::new(0.0, 1.0).unwrap().complement().len(), 1);
        assert_eq!(Interval::new(0.5, 1.0).unwrap().complement().len(), 2);
        assert_eq!(Interval::new(0.5, PI).unwrap().complement().len(), 1);
    }
}
