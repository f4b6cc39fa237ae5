use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `log Γ(z)` on some branch; only the real part and the imaginary part mod `2π` are meaningful.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    Ok(ln_gamma_unchecked(z))
}

fn ln_gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Γ(z) Γ(1 - z) = π / sin(πz)
        let s = (z * PI).sin();
        return Complex64::from(PI.ln()) - s.ln() - ln_gamma_unchecked(1.0 - z);
    }
    let z = z - 1.0;
    let mut acc = Complex64::from(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// `log γ(s, Sym^n)` as a magnitude and a phase in `(-π, π]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogGamma {
    pub log_abs: f64,
    pub arg: f64,
}

impl LogGamma {
    pub fn exp(&self) -> Complex64 {
        Complex64::from_polar(self.log_abs.exp(), self.arg)
    }
}

fn wrap_phase(x: f64) -> f64 {
    let r = x - 2.0 * PI * (x / (2.0 * PI)).round();
    if r <= -PI { r + 2.0 * PI } else { r }
}

/// Archimedean factor of `L(s, Sym^n)`.
///
/// Odd `n`: `(2^{1-s} π^{-s})^{(n+1)/2} ∏_{j=1}^{(n+1)/2} Γ(s + (j - 1/2)(n - 1))`.
/// Even `n`: `π^{-(s+n₂)/2} Γ((s+n₂)/2) (2^{1-s} π^{-s})^{n/2} ∏_{j=1}^{n/2} Γ(s + j(n - 1))`
/// with `n₂ = n/2 mod 2`.
pub fn gamma_factor(n: u32, s: Complex64) -> Result<LogGamma> {
    let log_c = (1.0 - s) * LN_2 - s * PI.ln();
    let nf = n as f64;
    let total = if n % 2 == 1 {
        let half = n.div_ceil(2);
        let mut acc = log_c * half as f64;
        for j in 1..=half {
            acc += ln_gamma(s + (j as f64 - 0.5) * (nf - 1.0))?;
        }
        acc
    } else {
        let n2 = ((n / 2) % 2) as f64;
        let half = n / 2;
        let mut acc = -(s + n2) / 2.0 * PI.ln() + ln_gamma((s + n2) / 2.0)? + log_c * half as f64;
        for j in 1..=half {
            acc += ln_gamma(s + j as f64 * (nf - 1.0))?;
        }
        acc
    };
    Ok(LogGamma { log_abs: total.re, arg: wrap_phase(total.im) })
}
