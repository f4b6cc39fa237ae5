//! Prime enumeration, extremal classification and range scans.

mod histogram;
mod sieve;

use std::f64::consts::{E, PI};
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::curves::CurveQ;
use crate::error::{Error, Result};
use crate::fmt::format_sig;
use crate::par::{try_map_ordered, Execution};
use crate::point_count::{hasse_width, trace_of_frobenius};

pub use histogram::{st_histogram, total_variation, HistogramBin};
pub use sieve::{primes_in_range, SegmentedSieve, SIEVE_CAP};
pub(crate) use sieve::chunk_ranges;

/// Integers per work item of a scan.
pub const CHUNK_SIZE: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Extremal {
    /// `a_p = [2√p]`
    #[serde(rename = "max")]
    Maximal,
    /// `a_p = -[2√p]`
    #[serde(rename = "min")]
    Minimal,
    #[serde(rename = "none")]
    NotExtremal,
}

impl Extremal {
    pub fn as_str(self) -> &'static str {
        match self {
            Extremal::Maximal => "max",
            Extremal::Minimal => "min",
            Extremal::NotExtremal => "none",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub p: u64,
    pub a_p: i64,
    pub theta: f64,
    pub extremal: Extremal,
}

impl TraceRecord {
    pub fn new(p: u64, a_p: i64) -> Result<Self> {
        Ok(TraceRecord {
            p,
            a_p,
            theta: theta_of(p, a_p)?,
            extremal: classify_extremal(p, a_p)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SkipReason {
    /// `p` divides the discriminant.
    Bad,
    /// `p ≤ 3`, never handled by the short-model code.
    Small,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedPrime {
    pub p: u64,
    pub reason: SkipReason,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WindowPrediction {
    pub non_cm: f64,
    pub cm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub x_lo: u64,
    pub x_hi: u64,
    pub curve_label: String,
    pub n_primes: usize,
    pub n_maximal: usize,
    pub n_minimal: usize,
    pub skipped_primes: Vec<SkippedPrime>,
    /// Predicted number of `a_p = [2√p]` primes in the window, when `x_hi > e`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_maximal: Option<WindowPrediction>,
    /// `n_maximal / √x_hi`; the implied constant of the `x^{1/2}` bound is not asserted.
    pub maximal_over_sqrt_x: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<TraceRecord>>,
}

impl ScanReport {
    /// Writes `p,a_p,theta,extremal` rows; requires a scan that kept its records.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        let records = self.records.as_deref().ok_or_else(|| {
            io::Error::new(io::ErrorKind::InvalidInput, "scan report has no records")
        })?;
        write_records_csv(records, &mut w)
    }
}

pub fn write_records_csv<W: Write>(records: &[TraceRecord], mut w: W) -> io::Result<()> {
    writeln!(w, "p,a_p,theta,extremal")?;
    for r in records {
        writeln!(w, "{},{},{},{}", r.p, r.a_p, format_sig(r.theta), r.extremal.as_str())?;
    }
    Ok(())
}

fn check_hasse(p: u64, a_p: i64) -> Result<()> {
    if (a_p as i128) * (a_p as i128) > 4 * p as i128 {
        return Err(Error::HasseViolation { p, a_p });
    }
    Ok(())
}

/// Integer-only classification against `[2√p]`.
pub fn classify_extremal(p: u64, a_p: i64) -> Result<Extremal> {
    check_hasse(p, a_p)?;
    let w = hasse_width(p);
    Ok(if a_p == w {
        Extremal::Maximal
    } else if a_p == -w {
        Extremal::Minimal
    } else {
        Extremal::NotExtremal
    })
}

/// The Sato-Tate angle `θ_p ∈ [0, π]` with `a_p = 2√p cos θ_p`.
pub fn theta_of(p: u64, a_p: i64) -> Result<f64> {
    check_hasse(p, a_p)?;
    let c = a_p as f64 / (2.0 * (p as f64).sqrt());
    Ok(c.clamp(-1.0, 1.0).acos())
}

/// Conjectured count of `p ≤ x` with `a_p = [2√p]`.
pub fn predict_extremal(x: f64, cm: bool) -> Result<f64> {
    if x.is_nan() || x <= E {
        return Err(Error::Domain(format!("predict_extremal needs x > e, got {x}")));
    }
    Ok(if cm {
        2.0 / (3.0 * PI) * x.powf(0.75) / x.ln()
    } else {
        8.0 / (3.0 * PI) * x.powf(0.25) / x.ln()
    })
}

fn window_prediction(lo: u64, hi: u64) -> Option<WindowPrediction> {
    let at = |x: u64, cm: bool| predict_extremal(x as f64, cm).ok();
    let (hi_n, hi_c) = (at(hi, false)?, at(hi, true)?);
    let (lo_n, lo_c) = (at(lo, false).unwrap_or(0.0), at(lo, true).unwrap_or(0.0));
    Some(WindowPrediction {
        non_cm: hi_n - lo_n,
        cm: hi_c - lo_c,
    })
}

/// Per-chunk classification of the primes in one sub-range.
#[derive(Debug, Default)]
pub(crate) struct ChunkPrimes {
    pub good: Vec<u64>,
    pub skipped: Vec<SkippedPrime>,
}

pub(crate) fn partition_primes(curve: &CurveQ, primes: &[u64]) -> ChunkPrimes {
    let mut out = ChunkPrimes::default();
    for &p in primes {
        if curve.has_bad_reduction(p) {
            out.skipped.push(SkippedPrime { p, reason: SkipReason::Bad });
        } else if p <= 3 {
            out.skipped.push(SkippedPrime { p, reason: SkipReason::Small });
        } else {
            out.good.push(p);
        }
    }
    out
}

/// Maps `f` over the fixed chunks of `[lo, hi)`, each receiving its primes in order.
pub(crate) fn map_prime_chunks<T, F>(lo: u64, hi: u64, exec: Execution, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&[u64]) -> Result<T> + Sync + Send,
{
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    let sieve = SegmentedSieve::new(hi)?;
    let chunks = chunk_ranges(lo, hi, CHUNK_SIZE);
    try_map_ordered(&chunks, exec, |&(a, b)| f(&sieve.primes_in(a, b)))
}

/// Scans the good primes of `[x_lo, x_hi)`.
pub fn scan(curve: &CurveQ, x_lo: u64, x_hi: u64, keep_records: bool) -> Result<ScanReport> {
    scan_with(curve, x_lo, x_hi, keep_records, Execution::default())
}

pub fn scan_with(
    curve: &CurveQ,
    x_lo: u64,
    x_hi: u64,
    keep_records: bool,
    exec: Execution,
) -> Result<ScanReport> {
    if x_lo >= x_hi {
        return Err(Error::InvalidRange { lo: x_lo, hi: x_hi });
    }
    let chunks = map_prime_chunks(x_lo, x_hi, exec, |primes| {
        let part = partition_primes(curve, primes);
        let records = part
            .good
            .iter()
            .map(|&p| {
                let t = trace_of_frobenius(curve, p)?;
                debug_assert_ne!(hasse_width(p).pow(2), 4 * p as i64);
                TraceRecord::new(p, t.a_p)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((records, part.skipped))
    })
    .map_err(|e| e.for_curve(curve.label()))?;

    let mut records = Vec::new();
    let mut skipped_primes = Vec::new();
    for (r, s) in chunks {
        records.extend(r);
        skipped_primes.extend(s);
    }
    let n_maximal = records.iter().filter(|r| r.extremal == Extremal::Maximal).count();
    let n_minimal = records.iter().filter(|r| r.extremal == Extremal::Minimal).count();
    Ok(ScanReport {
        x_lo,
        x_hi,
        curve_label: curve.label().to_string(),
        n_primes: records.len(),
        n_maximal,
        n_minimal,
        skipped_primes,
        predicted_maximal: window_prediction(x_lo, x_hi),
        maximal_over_sqrt_x: n_maximal as f64 / (x_hi as f64).sqrt(),
        records: keep_records.then_some(records),
    })
}

/// `M = ⌈x^{1/4} / (log x)^{1/2}⌉`, the approximation degree paired with the window `[x, 2x)`.
pub fn window_degree(x: u64) -> u64 {
    let x = x as f64;
    (x.powf(0.25) / x.ln().sqrt()).ceil() as u64
}

/// The counting-side inequality behind the `x^{1/2}` bound, evaluated on data.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SandwichCheck {
    pub x: u64,
    pub m: u64,
    /// `cos(1/M) ≤ 1 - x^{-1/2}`
    pub epsilon_ok: bool,
    /// `#{x ≤ p < 2x : a_p = [2√p]}`
    pub n_maximal: usize,
    /// `#{x ≤ p < 2x : θ_p ∈ [0, 1/M]}`
    pub n_in_cap: usize,
}

impl SandwichCheck {
    pub fn holds(&self) -> bool {
        self.epsilon_ok && self.n_maximal <= self.n_in_cap
    }
}

pub fn sandwich_check(records: &[TraceRecord], x: u64) -> SandwichCheck {
    let m = window_degree(x);
    let eps = 1.0 / m as f64;
    let window = records.iter().filter(|r| r.p >= x && r.p < 2 * x);
    let (mut n_maximal, mut n_in_cap) = (0, 0);
    for r in window {
        if r.extremal == Extremal::Maximal {
            n_maximal += 1;
        }
        if r.theta <= eps {
            n_in_cap += 1;
        }
    }
    SandwichCheck {
        x,
        m,
        epsilon_ok: eps.cos() <= 1.0 - (x as f64).powf(-0.5),
        n_maximal,
        n_in_cap,
    }
}
