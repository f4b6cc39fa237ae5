//! Symmetric-power von Mangoldt coefficients, conductors, gamma factors and
//! smoothed prime sums.

mod gamma;
mod local;
mod sums;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::quadrature::integrate_adaptive;

pub use gamma::{gamma_factor, ln_gamma, LogGamma};
pub use local::{
    conductor_bound, conductor_exponent, lambda_sym_bad, lambda_sym_good, ConductorBound,
    ConductorExponent, SymPowLocalData,
};
pub use sums::{psi_error_terms, psi_parts, psi_sym, smoothed_sum, smoothed_sum_with, PsiParts};

/// `exp(4/3 + 1/((y - 1/2)(y - 5/2)))` on `(1/2, 5/2)`, zero elsewhere. Peaks at `e^{1/3}` for `y = 3/2`.
pub fn bump_g(y: f64) -> f64 {
    if y <= 0.5 || y >= 2.5 {
        return 0.0;
    }
    (4.0 / 3.0 + 1.0 / ((y - 0.5) * (y - 2.5))).exp()
}

/// `∫_0^∞ g(t) dt`, by quadrature on the support, computed once.
pub fn bump_integral() -> f64 {
    static CELL: OnceLock<f64> = OnceLock::new();
    *CELL.get_or_init(|| {
        integrate_adaptive(0.5, 2.5, bump_g).expect("bump quadrature converges")
    })
}

/// The rescaled bump `g_x(y) = g(y/x)`, supported on `(x/2, 5x/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BumpWeight {
    x: f64,
}

impl BumpWeight {
    pub fn new(x: f64) -> Result<Self> {
        if !(x > 0.0 && x.is_finite()) {
            return Err(Error::Domain(format!("bump scale must be positive, got {x}")));
        }
        Ok(BumpWeight { x })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn eval(&self, y: f64) -> f64 {
        bump_g(y / self.x)
    }

    /// Integers `[lo, hi)` covering the open support.
    pub fn support(&self) -> (u64, u64) {
        let lo = (self.x / 2.0).floor() as u64 + 1;
        let hi = (2.5 * self.x).ceil() as u64;
        (lo, hi.max(lo))
    }
}
