use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::chebyshev::{chebyshev_u_all, chebyshev_u_series};
use super::kernels::beurling;
use super::Interval;
use crate::error::{Error, Result};
use crate::quadrature::integrate_adaptive_vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Majorant,
    Minorant,
}

/// A degree-`M` polynomial in `cos θ`, stored by its Chebyshev-U coefficients
/// `F̂(0..=M)` taken against the Sato-Tate probability measure.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxPolynomial {
    degree: usize,
    coeffs: Vec<f64>,
    side: Side,
    interval: Interval,
}

impl ApproxPolynomial {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    /// `Σ F̂(n) U_n(cos θ)`.
    pub fn eval(&self, theta: f64) -> f64 {
        chebyshev_u_series(&self.coeffs, theta.cos())
    }

    /// Direct evaluation from the Beurling kernels, bypassing the coefficients.
    pub fn eval_kernel(&self, theta: f64) -> f64 {
        match self.side {
            Side::Majorant => majorant_kernel(self.interval, self.degree, theta),
            Side::Minorant => minorant_kernel(self.interval, self.degree, theta),
        }
    }
}

/// Majorant of `χ_I` for `I = [α, β]` at angle `θ`.
///
/// With `J = [a, b] = [α/2π, β/2π]` and `S(y) = (b - a) + B_M(y - b) + B_M(a - y)`
/// (a majorant of the period-1 indicator of `J`), this is `S(x) + S(-x)` at `x = θ/2π`.
pub(crate) fn majorant_kernel(i: Interval, m: usize, theta: f64) -> f64 {
    let (a, b) = (i.alpha() / (2.0 * PI), i.beta() / (2.0 * PI));
    let x = theta / (2.0 * PI);
    let s = |y: f64| (b - a) + beurling(m, y - b) + beurling(m, a - y);
    s(x) + s(-x)
}

/// Minorant of `χ_I` at angle `θ`, the Selberg counterpart of [`majorant_kernel`].
///
/// Uses `s(y) ≥ -B_M(-y)` on each jump of `χ_J(x) + χ_J(-x)`. Endpoints at
/// `0` or `π` are not jumps in `θ`, so their terms are dropped.
pub(crate) fn minorant_kernel(i: Interval, m: usize, theta: f64) -> f64 {
    let (a, b) = (i.alpha() / (2.0 * PI), i.beta() / (2.0 * PI));
    let x = theta / (2.0 * PI);
    let mut v = 2.0 * (b - a);
    if i.alpha() > 0.0 {
        v -= beurling(m, x - a) + beurling(m, -x - a);
    }
    if i.beta() < PI {
        v -= beurling(m, b - x) + beurling(m, b + x);
    }
    v
}

/// `∫_0^π f(θ) U_n(cos θ) (2/π) sin²θ dθ` for `n = 0..=m`.
pub(crate) fn u_coefficients<F: Fn(f64) -> f64>(m: usize, f: F) -> Result<Vec<f64>> {
    integrate_adaptive_vec(0.0, PI, m + 1, |theta, out| {
        let w = f(theta) * 2.0 / PI * theta.sin().powi(2);
        chebyshev_u_all(theta.cos(), out);
        out.iter_mut().for_each(|v| *v *= w);
    })
}

fn check_degree(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::Domain("approximation degree M must be at least 1".into()));
    }
    Ok(())
}

/// Degree-`M` majorant `F⁺_{I,M} ≥ χ_I`, coefficients extracted by quadrature.
pub fn majorant(i: Interval, m: usize) -> Result<ApproxPolynomial> {
    check_degree(m)?;
    let coeffs = u_coefficients(m, |theta| majorant_kernel(i, m, theta))?;
    Ok(ApproxPolynomial { degree: m, coeffs, side: Side::Majorant, interval: i })
}

/// Degree-`M` minorant `F⁻_{I,M} ≤ χ_I`. For `I = [0, π]` this is the constant `1`.
pub fn minorant(i: Interval, m: usize) -> Result<ApproxPolynomial> {
    check_degree(m)?;
    let coeffs = if i == Interval::full() {
        let mut c = vec![0.0; m + 1];
        c[0] = 1.0;
        c
    } else {
        u_coefficients(m, |theta| minorant_kernel(i, m, theta))?
    };
    Ok(ApproxPolynomial { degree: m, coeffs, side: Side::Minorant, interval: i })
}
