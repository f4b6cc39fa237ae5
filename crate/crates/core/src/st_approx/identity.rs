use std::f64::consts::PI;

use super::chebyshev::chebyshev_u;
use super::kernels::fejer;
use crate::error::{Error, Result};
use crate::quadrature::integrate_adaptive;

/// Closed form of `(M+1) ∫_{-1/2}^{1/2} Δ_{M+1}(x - β) U_n(cos 2πx) sin²(2πx) dx`.
///
/// Writing `T(k) = (M + 1 - k) cos(2πkβ)` for `k ≤ M` and `T(k) = 0` beyond,
/// the value is `(T(n) - T(n + 2)) / 2`. At `β = 0` this is `1` for `n < M`
/// and `1/2` for `n = M`.
pub fn fejer_integral_identity(m: usize, n: usize, beta: f64) -> Result<f64> {
    if m == 0 || n > m {
        return Err(Error::Domain(format!("need 1 ≤ M and n ≤ M, got M = {m}, n = {n}")));
    }
    let t = |k: usize| {
        if k > m {
            0.0
        } else {
            (m + 1 - k) as f64 * (2.0 * PI * k as f64 * beta).cos()
        }
    };
    Ok((t(n) - t(n + 2)) / 2.0)
}

/// The same integral by direct quadrature of the Fejér kernel.
pub fn fejer_integral_quadrature(m: usize, n: usize, beta: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::Domain("need M ≥ 1".into()));
    }
    let v = integrate_adaptive(-0.5, 0.5, |x| {
        let c = (2.0 * PI * x).cos();
        let s = (2.0 * PI * x).sin();
        fejer(m + 1, x - beta) * chebyshev_u(n, c) * s * s
    })?;
    Ok((m + 1) as f64 * v)
}
