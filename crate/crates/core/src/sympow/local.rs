use std::f64::consts::LN_2;

use num_bigint::BigUint;
use num_complex::Complex64;
use serde::Serialize;

use crate::curves::{BadPrimeSpec, CurveQ, ReductionKind};
use crate::error::{Error, Result};
use crate::st_approx::chebyshev_u;

/// `Λ_{Sym^n}(p^m) = U_n(cos mθ_p) log p` at a good prime.
pub fn lambda_sym_good(n: usize, p: u64, m: u32, theta_p: f64) -> f64 {
    chebyshev_u(n, (m as f64 * theta_p).cos()) * ln(p)
}

fn ln(p: u64) -> f64 {
    if p == 2 { LN_2 } else { (p as f64).ln() }
}

/// Conductor exponent of `Sym^n` at one bad prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConductorExponent {
    /// Tame part `ε_n`, exact or an upper bound.
    pub eps_n: u32,
    /// Wild part `δ_n`, exact or an upper bound.
    pub delta_n: u32,
    pub exact: bool,
}

pub fn conductor_exponent(spec: &BadPrimeSpec, n: u32) -> ConductorExponent {
    let exact = |eps_n, delta_n| ConductorExponent { eps_n, delta_n, exact: true };
    if n == 0 {
        return exact(0, 0);
    }
    match spec.kind {
        ReductionKind::Multiplicative => exact(n, 0),
        ReductionKind::PotentiallyMultiplicative => {
            let odd = n % 2 == 1;
            let eps = if odd { n + 1 } else { n };
            let delta = if spec.p == 2 && odd { n.div_ceil(2) * spec.delta1_at_2 } else { 0 };
            exact(eps, delta)
        }
        ReductionKind::PotentiallyGoodAbelian { .. } | ReductionKind::PotentiallyGoodNonabelian => {
            let delta = match spec.p {
                2 => 2 * (n + 1),
                3 => n.div_ceil(2),
                _ => 0,
            };
            ConductorExponent { eps_n: n + 1, delta_n: delta, exact: false }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConductorBound {
    /// `2^{6(n+1)} 3^{⌊(n+1)/2⌋} ∏ p^{n+1}` over the listed bad primes.
    pub bound: BigUint,
    /// `∏ p^{ε_n + δ_n}`, present when every local exponent is known exactly.
    pub exact: Option<BigUint>,
}

/// Bound for the conductor of `Sym^n(E)` from the bad primes attached to `curve`.
///
/// The bad-prime list is taken as complete; primes dividing the model's
/// discriminant but absent from the list contribute nothing.
pub fn conductor_bound(curve: &CurveQ, n: u32) -> ConductorBound {
    if n == 0 {
        return ConductorBound { bound: BigUint::from(1u8), exact: Some(BigUint::from(1u8)) };
    }
    let mut bound = BigUint::from(2u8).pow(6 * (n + 1)) * BigUint::from(3u8).pow(n.div_ceil(2));
    let mut exact = Some(BigUint::from(1u8));
    for spec in curve.bad_primes() {
        let p = BigUint::from(spec.p);
        bound *= p.pow(n + 1);
        let e = conductor_exponent(spec, n);
        exact = match exact {
            Some(acc) if e.exact => Some(acc * p.pow(e.eps_n + e.delta_n)),
            _ => None,
        };
    }
    ConductorBound { bound, exact }
}

/// Local data at one bad prime needed for `Λ_{Sym^n}(p^m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymPowLocalData {
    spec: BadPrimeSpec,
    n: u32,
    beta_p: Option<Complex64>,
    eps_n: u32,
    delta_n: u32,
    sign: i8,
}

impl SymPowLocalData {
    pub fn new(
        spec: BadPrimeSpec,
        n: u32,
        beta_p: Option<Complex64>,
        eps_n: u32,
        delta_n: u32,
        sign: i8,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InconsistentLocalData(format!("p = {}: {msg}", spec.p)));
        if eps_n > n + 1 {
            return bad(format!("eps_{n} = {eps_n} exceeds n + 1"));
        }
        if sign != 1 && sign != -1 {
            return bad(format!("sign must be +1 or -1, got {sign}"));
        }
        if let Some(b) = beta_p {
            let p = spec.p as f64;
            if ((b.norm_sqr() - p) / p).abs() > 1e-9 {
                return bad(format!("|beta|^2 = {} but p = {}", b.norm_sqr(), spec.p));
            }
        }
        if spec.kind == ReductionKind::Multiplicative && spec.a_p1 == 0 {
            return bad("multiplicative reduction needs a_p1 = +1 or -1".into());
        }
        Ok(SymPowLocalData { spec, n, beta_p, eps_n, delta_n, sign })
    }

    /// Fills the exponents from [`conductor_exponent`] unless the bad-prime data lists
    /// `eps` explicitly; `beta` and `sign` are taken from it when present.
    pub fn from_spec(spec: &BadPrimeSpec, n: u32) -> Result<Self> {
        let e = conductor_exponent(spec, n);
        let eps_n = match &spec.eps {
            Some(list) => *list.get(n as usize).ok_or_else(|| {
                Error::InconsistentLocalData(format!("p = {}: no eps entry for n = {n}", spec.p))
            })?,
            None => e.eps_n,
        };
        Self::new(
            spec.clone(),
            n,
            spec.beta_complex(),
            eps_n,
            e.delta_n,
            spec.sign.unwrap_or(1),
        )
    }

    pub fn spec(&self) -> &BadPrimeSpec {
        &self.spec
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn beta_p(&self) -> Option<Complex64> {
        self.beta_p
    }

    pub fn eps_n(&self) -> u32 {
        self.eps_n
    }

    pub fn delta_n(&self) -> u32 {
        self.delta_n
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }
}

/// `Λ_{Sym^n}(p^m)` at a bad prime.
pub fn lambda_sym_bad(data: &SymPowLocalData, m: u32) -> Result<f64> {
    if m == 0 {
        return Err(Error::Domain("prime power exponent m must be at least 1".into()));
    }
    let spec = &data.spec;
    let (n, p) = (data.n, spec.p);
    let log_p = ln(p);
    if n == 0 {
        // Sym^0 is trivial: the classical Λ(p^m)
        return Ok(log_p);
    }
    match spec.kind {
        ReductionKind::Multiplicative | ReductionKind::PotentiallyMultiplicative => {
            // a_{p,n} = a_{p,1}^n and the p^{nm/2} normalisation
            let a_pn = (spec.a_p1 as f64).powi(n as i32);
            let scale = (p as f64).powf(-(n as f64) * m as f64 / 2.0);
            Ok(a_pn.powi(m as i32) * scale * log_p)
        }
        ReductionKind::PotentiallyGoodAbelian { d } => {
            let beta = data.beta_p.ok_or_else(|| {
                Error::InconsistentLocalData(format!("p = {p}: abelian case needs beta"))
            })?;
            // β^{n-k} β̄^k / p^{n/2} = u^{n-2k} with u = β/|β|
            let u = beta / beta.norm();
            let d = d as i64;
            let sum: f64 = (0..=n as i64)
                .filter(|k| (2 * k - n as i64) % d == 0)
                // |u^j| = 1 up to rounding; clamping keeps |sum| ≤ n + 1 exact
                .map(|k| u.powi(((n as i64 - 2 * k) * m as i64) as i32).re.clamp(-1.0, 1.0))
                .sum();
            Ok(sum * log_p)
        }
        ReductionKind::PotentiallyGoodNonabelian => {
            if n % 2 == 1 {
                return Err(Error::UnsupportedCase(format!(
                    "p = {p}: non-abelian local group with odd n = {n}"
                )));
            }
            let sign = if m.is_multiple_of(2) { 1.0 } else { data.sign as f64 };
            let parity = if (m * n / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
            Ok(sign * parity * log_p * (n + 1 - data.eps_n) as f64)
        }
    }
}
