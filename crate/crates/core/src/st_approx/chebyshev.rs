/// `U_n(x)` by the three-term recurrence.
pub fn chebyshev_u(n: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for _ in 0..n {
        (prev, cur) = (cur, 2.0 * x * cur - prev);
    }
    cur
}

/// Fills `out[k] = U_k(x)` for `k < out.len()`.
pub fn chebyshev_u_all(x: f64, out: &mut [f64]) {
    let mut it = out.iter_mut();
    let Some(first) = it.next() else { return };
    *first = 1.0;
    let (mut prev, mut cur) = (0.0, 1.0);
    for slot in it {
        (prev, cur) = (cur, 2.0 * x * cur - prev);
        *slot = cur;
    }
}

/// `Σ coeffs[k] U_k(x)` by Clenshaw's recurrence.
pub fn chebyshev_u_series(coeffs: &[f64], x: f64) -> f64 {
    let (mut b1, mut b2) = (0.0, 0.0);
    for &c in coeffs.iter().rev() {
        (b1, b2) = (c + 2.0 * x * b1 - b2, b1);
    }
    b1
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn examples() {
        for x in [-1.0, -0.3, 0.0, 0.7, 1.0] {
            assert_eq!(chebyshev_u(0, x), 1.0);
            assert!((chebyshev_u(2, x) - (4.0 * x * x - 1.0)).abs() < 1e-15);
        }
        for n in 0..50 {
            assert!((chebyshev_u(n, 1.0) - (n as f64 + 1.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn recurrence_matches_sine_ratio() {
        let mut worst: f64 = 0.0;
        let steps = 2000;
        for i in 0..=steps {
            let theta = 0.01 + (PI - 0.02) * i as f64 / steps as f64;
            for n in 0..=100 {
                let ratio = ((n + 1) as f64 * theta).sin() / theta.sin();
                worst = worst.max((chebyshev_u(n, theta.cos()) - ratio).abs());
            }
        }
        assert!(worst < 1e-8, "worst deviation {worst:e}");
    }

    #[test]
    fn all_and_series_agree_with_single() {
        let mut buf = [0.0; 12];
        chebyshev_u_all(0.37, &mut buf);
        for (n, v) in buf.iter().enumerate() {
            assert_eq!(*v, chebyshev_u(n, 0.37));
        }
        let coeffs = [0.5, -1.0, 0.25, 2.0];
        let direct: f64 = coeffs.iter().enumerate().map(|(n, c)| c * chebyshev_u(n, 0.37)).sum();
        assert!((chebyshev_u_series(&coeffs, 0.37) - direct).abs() < 1e-14);
        assert_eq!(chebyshev_u_series(&[], 0.3), 0.0);
    }

    proptest! {
        #[test]
        fn bounded_by_n_plus_one(n in 0usize..200, x in -1.0f64..=1.0) {
            prop_assert!(chebyshev_u(n, x).abs() <= n as f64 + 1.0 + 1e-9);
        }
    }
}
