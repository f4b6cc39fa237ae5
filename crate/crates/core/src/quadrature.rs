//! Composite Gauss-Legendre quadrature with panel doubling.

use std::num::NonZeroUsize;
use std::sync::OnceLock;

use gauss_quad::legendre::GaussLegendre;

use crate::error::{Error, Result};

/// Nodes per panel.
pub const PANEL_ORDER: usize = 64;
/// Convergence threshold between successive panel doublings.
pub const TOLERANCE: f64 = 1e-11;
/// Hard cap on the total node count.
pub const MAX_NODES: usize = 1 << 20;

fn reference_rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let rule = GaussLegendre::new(NonZeroUsize::new(PANEL_ORDER).unwrap());
        let mut pairs = rule.as_node_weight_pairs().to_vec();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        pairs
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    domain: (f64, f64),
    exact_degree: usize,
}

impl QuadratureRule {
    /// `panels` equal Gauss-Legendre panels of [`PANEL_ORDER`] nodes on `[lo, hi]`.
    pub fn composite(lo: f64, hi: f64, panels: usize) -> Self {
        assert!(panels >= 1 && hi >= lo);
        let h = (hi - lo) / panels as f64;
        let reference = reference_rule();
        let mut nodes = Vec::with_capacity(panels * PANEL_ORDER);
        let mut weights = Vec::with_capacity(panels * PANEL_ORDER);
        for k in 0..panels {
            let a = lo + k as f64 * h;
            for &(x, w) in reference {
                nodes.push(a + 0.5 * h * (x + 1.0));
                weights.push(0.5 * h * w);
            }
        }
        QuadratureRule {
            nodes,
            weights,
            domain: (lo, hi),
            exact_degree: 2 * PANEL_ORDER - 1,
        }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    /// Polynomials up to this degree are integrated exactly on each panel.
    pub fn exact_degree(&self) -> usize {
        self.exact_degree
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// Integrates a vector-valued integrand; `f(x, out)` fills `out` with the values at `x`.
    pub fn integrate_vec<F: FnMut(f64, &mut [f64])>(&self, dim: usize, mut f: F) -> Vec<f64> {
        let mut acc = vec![0.0; dim];
        let mut buf = vec![0.0; dim];
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            buf.iter_mut().for_each(|v| *v = 0.0);
            f(x, &mut buf);
            for (a, v) in acc.iter_mut().zip(&buf) {
                *a += w * v;
            }
        }
        acc
    }
}

pub fn integrate_adaptive<F: Fn(f64) -> f64>(lo: f64, hi: f64, f: F) -> Result<f64> {
    integrate_adaptive_vec(lo, hi, 1, |x, out| out[0] = f(x)).map(|v| v[0])
}

/// Doubles the panel count until every component changes by less than [`TOLERANCE`].
pub fn integrate_adaptive_vec<F: Fn(f64, &mut [f64])>(
    lo: f64,
    hi: f64,
    dim: usize,
    f: F,
) -> Result<Vec<f64>> {
    let mut panels = 1;
    let mut prev = QuadratureRule::composite(lo, hi, panels).integrate_vec(dim, &f);
    loop {
        panels *= 2;
        let next = QuadratureRule::composite(lo, hi, panels).integrate_vec(dim, &f);
        let change = prev
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if change < TOLERANCE {
            return Ok(next);
        }
        if panels * 2 * PANEL_ORDER > MAX_NODES {
            return Err(Error::QuadratureFailure {
                nodes: panels * PANEL_ORDER,
                last_change: change,
            });
        }
        prev = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn weights_sum_to_length() {
        for panels in [1, 3, 16] {
            let r = QuadratureRule::composite(-0.5, 2.0, panels);
            assert!((r.weights().iter().sum::<f64>() - 2.5).abs() < 1e-12);
            assert_eq!(r.nodes().len(), panels * PANEL_ORDER);
        }
    }

    #[test]
    fn exact_on_polynomials_up_to_degree() {
        let r = QuadratureRule::composite(0.0, 1.0, 1);
        assert_eq!(r.exact_degree(), 127);
        for k in [0, 1, 10, 63, 127] {
            let got = r.integrate(|x| x.powi(k));
            assert!((got - 1.0 / (k as f64 + 1.0)).abs() < 1e-13, "degree {k}");
        }
    }

    #[test]
    fn nodes_avoid_panel_edges() {
        let r = QuadratureRule::composite(-0.5, 0.5, 8);
        assert!(r.nodes().iter().all(|&x| x != 0.0 && x.abs() < 0.5));
    }

    #[test]
    fn adaptive_oscillatory() {
        let v = integrate_adaptive(0.0, PI, |t| (200.0 * t).sin().powi(2)).unwrap();
        assert!((v - PI / 2.0).abs() < 1e-11);
    }

    #[test]
    fn adaptive_failure_is_reported() {
        // discontinuous integrand never settles at 1e-11
        let r = integrate_adaptive(0.0, 1.0, |x| if x < 1.0 / 3.0 { 1.0 } else { 0.0 });
        assert!(matches!(r, Err(Error::QuadratureFailure { .. })));
    }
}
