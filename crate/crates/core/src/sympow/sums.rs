use serde::Serialize;

use super::local::{lambda_sym_bad, lambda_sym_good, SymPowLocalData};
use super::BumpWeight;
use crate::curves::CurveQ;
use crate::error::{Error, Result};
use crate::par::{pairwise_sum, Execution};
use crate::point_count::{count_points_naive, isqrt, trace_of_frobenius};
use crate::prime_scan::{map_prime_chunks, partition_primes, theta_of};
use crate::st_approx::chebyshev_u;

/// `Σ U_n(cos θ_p) g_x(p) log p` over good primes `p > 3` in the support `(x/2, 5x/2)`.
pub fn smoothed_sum(curve: &CurveQ, n: usize, x: f64) -> Result<f64> {
    if x.is_nan() || x < 100.0 {
        return Err(Error::Domain(format!("smoothed sum needs x >= 100, got {x}")));
    }
    smoothed_sum_with(curve, n, x, Execution::default())
}

/// As [`smoothed_sum`], with an explicit execution mode and no lower limit on `x`.
pub fn smoothed_sum_with(curve: &CurveQ, n: usize, x: f64, exec: Execution) -> Result<f64> {
    let weight = BumpWeight::new(x)?;
    let (lo, hi) = weight.support();
    let partials = map_prime_chunks(lo, hi, exec, |primes| {
        let good = partition_primes(curve, primes).good;
        let terms = good
            .iter()
            .map(|&p| {
                let w = weight.eval(p as f64) * (p as f64).ln();
                if n == 0 {
                    return Ok(w);
                }
                let t = trace_of_frobenius(curve, p)?;
                Ok(chebyshev_u(n, cos_theta(p, t.a_p)) * w)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(pairwise_sum(&terms))
    })
    .map_err(|e| e.for_curve(curve.label()))?;
    Ok(pairwise_sum(&partials))
}

fn cos_theta(p: u64, a_p: i64) -> f64 {
    (a_p as f64 / (2.0 * (p as f64).sqrt())).clamp(-1.0, 1.0)
}

/// `ψ_{Sym^n}` restricted to prime powers in `(lo, hi]`, split by origin.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PsiParts {
    /// Good primes, first powers.
    pub primes: f64,
    /// Good primes, powers `m ≥ 2`.
    pub prime_powers: f64,
    /// All powers of bad primes with usable local data.
    pub bad: f64,
    /// Bad primes whose terms were left out for lack of local data.
    pub skipped_bad: Vec<u64>,
}

impl PsiParts {
    pub fn total(&self) -> f64 {
        self.primes + self.prime_powers + self.bad
    }
}

/// `ψ_{Sym^n}(x) = Σ_{p^m ≤ x} Λ_{Sym^n}(p^m)`, with the skipped bad primes.
pub fn psi_sym(curve: &CurveQ, n: usize, x: f64) -> Result<(f64, Vec<u64>)> {
    if x < 2.0 {
        return Ok((0.0, Vec::new()));
    }
    let parts = psi_parts(curve, n, 1, x.floor() as u64, Execution::default())?;
    Ok((parts.total(), parts.skipped_bad))
}

/// The contributions of prime powers `j ∈ (lo, hi]` to `ψ_{Sym^n}`.
///
/// At `n = 0` every prime, good or bad, contributes `Λ(j)`.
pub fn psi_parts(curve: &CurveQ, n: usize, lo: u64, hi: u64, exec: Execution) -> Result<PsiParts> {
    parts(curve, n, lo, hi, exec, true)
}

/// Prime-power and bad-prime terms of `ψ_{Sym^n}` over `(lo, hi]`, the part not
/// governed by the Sato-Tate distribution. Skips the first powers of good primes,
/// so no traces are computed beyond `√hi`; `primes` is reported as zero.
pub fn psi_error_terms(
    curve: &CurveQ,
    n: usize,
    lo: u64,
    hi: u64,
    exec: Execution,
) -> Result<PsiParts> {
    parts(curve, n, lo, hi, exec, false)
}

fn parts(
    curve: &CurveQ,
    n: usize,
    lo: u64,
    hi: u64,
    exec: Execution,
    with_primes: bool,
) -> Result<PsiParts> {
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    let local = BadLocal::new(curve, n);
    let ctx = |e: Error| e.for_curve(curve.label());

    // first powers, chunked over (lo, hi]
    let chunks = map_prime_chunks(lo + 1, hi + 1, exec, |primes| {
        let mut good = Vec::new();
        let mut bad = Vec::new();
        let mut skipped = Vec::new();
        for &p in primes {
            match local.term(p, 1)? {
                Term::Bad(Some(v)) => bad.push(v),
                Term::Bad(None) => skipped.push(p),
                Term::Good if with_primes => {
                    good.push(lambda_sym_good(n, p, 1, theta(curve, n, p)?))
                }
                Term::Good => {}
            }
        }
        Ok((pairwise_sum(&good), pairwise_sum(&bad), skipped))
    })
    .map_err(ctx)?;
    let mut primes = Vec::with_capacity(chunks.len());
    let mut bad = Vec::new();
    let mut skipped_bad = Vec::new();
    for (g, b, s) in chunks {
        primes.push(g);
        bad.push(b);
        skipped_bad.extend(s);
    }

    // higher powers only need p ≤ √hi
    let mut powers = Vec::new();
    let small = map_prime_chunks(2, isqrt(hi) + 1, Execution::Sequential, |ps| Ok(ps.to_vec()))
        .map_err(ctx)?;
    for p in small.into_iter().flatten() {
        let mut pm = p;
        let mut theta_p = None;
        for m in 2u32.. {
            pm = match pm.checked_mul(p) {
                Some(v) if v <= hi => v,
                _ => break,
            };
            if pm <= lo {
                continue;
            }
            match local.term(p, m).map_err(ctx)? {
                Term::Bad(Some(v)) => bad.push(v),
                Term::Bad(None) => {
                    if !skipped_bad.contains(&p) {
                        skipped_bad.push(p);
                    }
                }
                Term::Good => {
                    let t = match theta_p {
                        Some(t) => t,
                        None => *theta_p.insert(theta(curve, n, p).map_err(ctx)?),
                    };
                    powers.push(lambda_sym_good(n, p, m, t));
                }
            }
        }
    }
    skipped_bad.sort_unstable();

    Ok(PsiParts {
        primes: pairwise_sum(&primes),
        prime_powers: pairwise_sum(&powers),
        bad: pairwise_sum(&bad),
        skipped_bad,
    })
}

/// `θ_p` at a good prime; skipped for `n = 0` where it is not needed.
fn theta(curve: &CurveQ, n: usize, p: u64) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    let a_p = if p > 3 {
        trace_of_frobenius(curve, p)?.a_p
    } else {
        let reduced = curve.reduce_mod_p(p)?;
        p as i64 + 1 - count_points_naive(&reduced) as i64
    };
    theta_of(p, a_p)
}

enum Term {
    Good,
    /// `None` when the local data is missing or unusable.
    Bad(Option<f64>),
}

struct BadLocal<'a> {
    curve: &'a CurveQ,
    n: usize,
}

impl<'a> BadLocal<'a> {
    fn new(curve: &'a CurveQ, n: usize) -> Self {
        BadLocal { curve, n }
    }

    fn term(&self, p: u64, m: u32) -> Result<Term> {
        if !self.curve.has_bad_reduction(p) {
            return Ok(Term::Good);
        }
        if self.n == 0 {
            return Ok(Term::Bad(Some((p as f64).ln())));
        }
        let Some(spec) = self.curve.bad_prime(p) else {
            return Ok(Term::Bad(None));
        };
        let value = SymPowLocalData::from_spec(spec, self.n as u32)
            .and_then(|data| lambda_sym_bad(&data, m));
        match value {
            Ok(v) => Ok(Term::Bad(Some(v))),
            Err(Error::InconsistentLocalData(_) | Error::UnsupportedCase(_)) => Ok(Term::Bad(None)),
            Err(e) => Err(e),
        }
    }
}
