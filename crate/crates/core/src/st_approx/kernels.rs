//! Period-1 kernels used to build the majorants.

use std::f64::consts::PI;

/// `x - round(x)`, in `[-1/2, 1/2]`.
#[inline]
fn wrap(x: f64) -> f64 {
    x - x.round()
}

/// `{x} - 1/2` off the integers, `0` on them.
pub fn sawtooth(x: f64) -> f64 {
    let frac = x - x.floor();
    if frac == 0.0 {
        0.0
    } else {
        frac - 0.5
    }
}

/// Fejér kernel `Δ_M(x) = (1/M)(sin πMx / sin πx)²`, equal to `M` at the integers.
pub fn fejer(m: usize, x: f64) -> f64 {
    let t = wrap(x);
    if t == 0.0 {
        return m as f64;
    }
    let r = (PI * m as f64 * t).sin() / (PI * t).sin();
    r * r / m as f64
}

/// Dirichlet kernel `D_k(x) = 1 + 2 Σ_{j=1}^{k} cos 2πjx`.
pub fn dirichlet(k: usize, x: f64) -> f64 {
    let t = wrap(x);
    1.0 + 2.0 * (1..=k).map(|j| (2.0 * PI * j as f64 * t).cos()).sum::<f64>()
}

/// Vaaler's degree-`M` approximation to the sawtooth.
pub fn vaaler(m: usize, x: f64) -> f64 {
    let t = wrap(x);
    let n1 = (m + 1) as f64;
    let shifted: f64 = (1..=m)
        .map(|k| {
            let u = k as f64 / n1;
            (u - 0.5) * fejer(m + 1, t - u)
        })
        .sum();
    shifted / n1 + (2.0 * PI * n1 * t).sin() / (2.0 * PI * n1)
        - fejer(m + 1, t) * (2.0 * PI * t).sin() / (2.0 * PI)
}

/// Beurling's degree-`M` majorant of the sawtooth: `V_M + Δ_{M+1} / (2(M+1))`.
pub fn beurling(m: usize, x: f64) -> f64 {
    vaaler(m, x) + fejer(m + 1, x) / (2.0 * (m + 1) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_adaptive;

    fn grid(points: usize) -> impl Iterator<Item = f64> {
        (0..points).map(move |i| -0.5 + (i as f64 + 0.5) / points as f64)
    }

    #[test]
    fn sawtooth_examples() {
        assert_eq!(sawtooth(0.25), -0.25);
        assert_eq!(sawtooth(0.0), 0.0);
        assert_eq!(sawtooth(-3.0), 0.0);
        assert_eq!(sawtooth(1.75), 0.25);
        assert_eq!(sawtooth(-0.25), 0.25);
    }

    #[test]
    fn fejer_examples() {
        for m in [1, 2, 7, 40] {
            assert_eq!(fejer(m, 0.0), m as f64);
            assert_eq!(fejer(m, 3.0), m as f64);
        }
        assert!((fejer(1, 0.3) - 1.0).abs() < 1e-15);
        for m in [2, 5, 10] {
            let mass = integrate_adaptive(-0.5, 0.5, |x| fejer(m, x)).unwrap();
            assert!((mass - 1.0).abs() < 1e-12, "M = {m}: {mass}");
        }
    }

    #[test]
    fn fejer_is_continuous_at_integers() {
        for m in [3, 17] {
            assert!((fejer(m, 1e-9) - m as f64).abs() < 1e-6);
            assert!((fejer(m, 2.0 - 1e-9) - m as f64).abs() < 1e-6);
        }
    }

    #[test]
    fn dirichlet_examples() {
        assert_eq!(dirichlet(0, 0.123), 1.0);
        for k in 0..10 {
            assert!((dirichlet(k, 0.0) - (2 * k + 1) as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn fejer_is_mean_of_dirichlet() {
        for m in [1usize, 4, 12] {
            for x in grid(97) {
                let sum: f64 = (0..=m).map(|k| dirichlet(k, x)).sum();
                assert!(((m + 1) as f64 * fejer(m + 1, x) - sum).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn vaaler_is_periodic_and_odd() {
        for m in [3, 8, 32] {
            for x in grid(101) {
                assert!((vaaler(m, x) - vaaler(m, x + 1.0)).abs() < 1e-10);
                assert!((vaaler(m, x) + vaaler(m, -x)).abs() < 1e-12);
            }
            assert!(vaaler(m, 0.5).is_finite());
            assert!((vaaler(m, 0.5) - vaaler(m, -0.5)).abs() < 1e-10);
        }
    }

    #[test]
    fn vaaler_error_has_cubic_decay() {
        // max over the grid of |V_M - s| (M|x|)^3 on M|x| ≥ 1, and sup |V_M - s| overall
        let mut constants = Vec::new();
        for m in [8usize, 32] {
            let mut c: f64 = 0.0;
            for i in 1..10_000 {
                let x = -0.5 + i as f64 / 10_000.0;
                if x == 0.0 {
                    continue;
                }
                let gap = (vaaler(m, x) - sawtooth(x)).abs();
                assert!(gap <= 1.0);
                let mx = m as f64 * x.abs();
                if mx >= 1.0 {
                    c = c.max(gap * mx.powi(3));
                }
            }
            constants.push(c);
        }
        // measured: 0.01096 (M = 8) and 0.01521 (M = 32)
        assert!((constants[0] - 0.010963).abs() < 1e-5, "{constants:?}");
        assert!((constants[1] - 0.015214).abs() < 1e-5, "{constants:?}");
    }

    #[test]
    fn beurling_majorizes_sawtooth() {
        for m in [4usize, 16, 64] {
            let slack = 1.0 + 1.0 / (2.0 * (m + 1) as f64);
            for i in 0..10_000 {
                let x = -0.5 + (i as f64 + 0.5) / 10_000.0;
                let gap = beurling(m, x) - sawtooth(x);
                assert!(gap >= 0.0, "M = {m}, x = {x}: {gap:e}");
                assert!(gap <= slack);
            }
        }
    }

    #[test]
    fn beurling_at_zero() {
        for m in [1usize, 5, 20] {
            assert!((beurling(m, 0.0) - (vaaler(m, 0.0) + 0.5)).abs() < 1e-15);
            assert!(vaaler(m, 0.0).abs() < 1e-15);
        }
    }

    #[test]
    fn beurling_excess_mass() {
        // ∫ (B_M - s) = 1/(2(M+1)) over a period
        for m in [4usize, 16] {
            let pos = integrate_adaptive(0.0, 0.5, |x| beurling(m, x) - sawtooth(x)).unwrap();
            let neg = integrate_adaptive(-0.5, 0.0, |x| beurling(m, x) - sawtooth(x)).unwrap();
            assert!((pos + neg - 1.0 / (2.0 * (m + 1) as f64)).abs() < 1e-6, "{}", pos + neg);
        }
    }
}
