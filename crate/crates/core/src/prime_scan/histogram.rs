use std::f64::consts::PI;

use serde::Serialize;

use super::TraceRecord;
use crate::st_approx::{mu_st, Interval};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HistogramBin {
    pub bin: usize,
    pub theta_lo: f64,
    pub theta_hi: f64,
    pub empirical: f64,
    pub mu_st: f64,
}

/// Empirical distribution of `θ_p` over `bins` equal bins of `[0, π]`, next to `μ_ST`.
///
/// Bins are `[0, b_1], (b_1, b_2], …`: a point on a shared boundary is
/// counted in the lower-indexed bin.
pub fn st_histogram(records: &[TraceRecord], bins: usize) -> Vec<HistogramBin> {
    assert!(bins >= 1, "histogram needs at least one bin");
    let width = PI / bins as f64;
    let mut counts = vec![0usize; bins];
    for r in records {
        let idx = ((r.theta / width).ceil() as usize).saturating_sub(1).min(bins - 1);
        counts[idx] += 1;
    }
    let total = records.len();
    (0..bins)
        .map(|i| {
            let lo = i as f64 * width;
            let hi = if i + 1 == bins { PI } else { (i + 1) as f64 * width };
            HistogramBin {
                bin: i,
                theta_lo: lo,
                theta_hi: hi,
                empirical: if total == 0 { 0.0 } else { counts[i] as f64 / total as f64 },
                mu_st: mu_st(Interval::new(lo, hi).expect("bin inside [0, π]")),
            }
        })
        .collect()
}

/// Total-variation distance `½ Σ |empirical - μ_ST|` over the bins.
pub fn total_variation(hist: &[HistogramBin]) -> f64 {
    0.5 * hist.iter().map(|b| (b.empirical - b.mu_st).abs()).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prime_scan::Extremal;

    fn rec(theta: f64) -> TraceRecord {
        TraceRecord { p: 5, a_p: 0, theta, extremal: Extremal::NotExtremal }
    }

    #[test]
    fn boundary_goes_to_lower_bin() {
        let h = st_histogram(&[rec(PI / 2.0)], 2);
        assert_eq!((h[0].empirical, h[1].empirical), (1.0, 0.0));
    }

    #[test]
    fn endpoints_land_in_outer_bins() {
        let h = st_histogram(&[rec(0.0), rec(PI)], 4);
        assert_eq!(h[0].empirical, 0.5);
        assert_eq!(h[3].empirical, 0.5);
    }

    #[test]
    fn empty_records() {
        let h = st_histogram(&[], 8);
        assert!(h.iter().all(|b| b.empirical == 0.0));
        assert!((h.iter().map(|b| b.mu_st).sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn single_bin() {
        let h = st_histogram(&[rec(0.3), rec(2.0)], 1);
        assert_eq!(h[0].empirical, 1.0);
        assert!((h[0].mu_st - 1.0).abs() < 1e-15);
        assert!(total_variation(&h) < 1e-15);
    }
}
