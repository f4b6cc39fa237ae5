//! Numerical checks of the coefficient bounds and the pointwise sandwich.

use std::f64::consts::PI;

use serde::Serialize;

use super::polynomial::{majorant, ApproxPolynomial, Side};
use super::{chebyshev_u, mu_st, Interval};
use crate::error::Result;
use crate::quadrature::integrate_adaptive_vec;

/// Sandwich grid size.
pub const SANDWICH_POINTS: usize = 10_000;
/// Half-width of the neighbourhoods of `α`, `β` left out of the sandwich grid.
pub const ENDPOINT_EXCLUSION: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalarCheck {
    pub value: f64,
    pub bound: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoefficientCheck {
    /// Index with the largest `|F̂(n)| / bound(n)`.
    pub worst_n: usize,
    pub worst_ratio: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SandwichResult {
    pub points: usize,
    /// Smallest `F⁺ - χ_I` (majorant) or `χ_I - F⁻` (minorant) over the grid.
    pub min_margin: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecayCheck {
    /// `M² max_n |F̂⁺(n)|`
    pub scaled_max: f64,
    /// `2 C(8)`, twice the same quantity at `M = 8`.
    pub reference: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundsCheck {
    pub constant_term: ScalarCheck,
    pub coefficients: CoefficientCheck,
    pub sandwich: SandwichResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decay: Option<DecayCheck>,
    pub all_pass: bool,
}

/// `4 (1/(M+1) + min((β - α)/2π, 1/(πn)))` for `n ≥ 1`.
pub fn coefficient_bound(i: Interval, m: usize, n: usize) -> f64 {
    let tail = (i.length() / (2.0 * PI)).min(1.0 / (PI * n as f64));
    4.0 * (1.0 / (m + 1) as f64 + tail)
}

fn constant_term_check(poly: &ApproxPolynomial) -> ScalarCheck {
    let value = (poly.coeffs()[0] - mu_st(poly.interval())).abs();
    let bound = 4.0 / (poly.degree() + 1) as f64;
    ScalarCheck { value, bound, pass: value <= bound }
}

fn coefficient_check(poly: &ApproxPolynomial) -> CoefficientCheck {
    let (i, m) = (poly.interval(), poly.degree());
    let (worst_n, worst_ratio) = poly
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| (n, c.abs() / coefficient_bound(i, m, n)))
        .fold((0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
    CoefficientCheck { worst_n, worst_ratio, pass: worst_ratio <= 1.0 }
}

/// Pointwise `F⁻ ≤ χ_I ≤ F⁺` on an equispaced grid of `[0, π]`, away from the endpoints.
pub fn sandwich_margin(poly: &ApproxPolynomial, points: usize, exclusion: f64) -> SandwichResult {
    let i = poly.interval();
    let mut used = 0;
    let mut min_margin = f64::INFINITY;
    for k in 0..points {
        let theta = PI * k as f64 / (points - 1) as f64;
        if (theta - i.alpha()).abs() < exclusion || (theta - i.beta()).abs() < exclusion {
            continue;
        }
        let chi = if i.contains(theta) { 1.0 } else { 0.0 };
        let f = poly.eval(theta);
        let margin = match poly.side() {
            Side::Majorant => f - chi,
            Side::Minorant => chi - f,
        };
        min_margin = min_margin.min(margin);
        used += 1;
    }
    SandwichResult { points: used, min_margin, pass: min_margin >= 0.0 }
}

/// `C(M) = M² max_{0≤n≤M} |F̂⁺_{I,M}(n)|` for `I = [0, 1/M]`.
pub fn decay_constant(m: usize) -> Result<f64> {
    let i = Interval::new(0.0, 1.0 / m as f64)?;
    let poly = majorant(i, m)?;
    Ok(scaled_max(&poly, 2))
}

pub(crate) fn scaled_max(poly: &ApproxPolynomial, power: i32) -> f64 {
    let m = poly.degree() as f64;
    m.powi(power) * poly.coeffs().iter().fold(0.0f64, |a, c| a.max(c.abs()))
}

fn is_edge_interval(poly: &ApproxPolynomial) -> bool {
    let i = poly.interval();
    i.alpha() == 0.0 && (i.beta() - 1.0 / poly.degree() as f64).abs() <= 1e-15
}

/// Runs every applicable check on `poly`. The decay check only applies to a
/// majorant of `[0, 1/M]`.
pub fn bounds_check(poly: &ApproxPolynomial) -> Result<BoundsCheck> {
    let constant_term = constant_term_check(poly);
    let coefficients = coefficient_check(poly);
    let sandwich = sandwich_margin(poly, SANDWICH_POINTS, ENDPOINT_EXCLUSION);
    let decay = if poly.side() == Side::Majorant && is_edge_interval(poly) {
        let reference = 2.0 * decay_constant(8)?;
        let scaled = scaled_max(poly, 2);
        Some(DecayCheck { scaled_max: scaled, reference, pass: scaled <= reference })
    } else {
        None
    };
    let all_pass = constant_term.pass
        && coefficients.pass
        && sandwich.pass
        && decay.is_none_or(|d| d.pass);
    Ok(BoundsCheck { constant_term, coefficients, sandwich, decay, all_pass })
}

/// `max_{j,k ≤ n_max} |⟨U_j, U_k⟩_{μ_ST} - δ_{jk}|` by quadrature.
pub fn orthonormality_defect(n_max: usize) -> Result<f64> {
    let dim = n_max + 1;
    let gram = integrate_adaptive_vec(0.0, PI, dim * dim, |theta, out| {
        let c = theta.cos();
        let w = 2.0 / PI * theta.sin().powi(2);
        let u: Vec<f64> = (0..dim).map(|n| chebyshev_u(n, c)).collect();
        for j in 0..dim {
            for k in 0..dim {
                out[j * dim + k] = u[j] * u[k] * w;
            }
        }
    })?;
    let mut worst: f64 = 0.0;
    for j in 0..dim {
        for k in 0..dim {
            let target = if j == k { 1.0 } else { 0.0 };
            worst = worst.max((gram[j * dim + k] - target).abs());
        }
    }
    Ok(worst)
}

/// `∫ χ_I U_n dμ_ST` for every `n ≤ m`, by quadrature on `I` alone.
#[cfg(test)]
pub(crate) fn indicator_coefficients(i: Interval, m: usize) -> Result<Vec<f64>> {
    integrate_adaptive_vec(i.alpha(), i.beta(), m + 1, |theta, out| {
        let w = 2.0 / PI * theta.sin().powi(2);
        super::chebyshev_u_all(theta.cos(), out);
        out.iter_mut().for_each(|v| *v *= w);
    })
}
