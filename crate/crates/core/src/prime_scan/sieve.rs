//! Segmented sieve of Eratosthenes.

use crate::error::{Error, Result};

/// Largest admissible range end.
pub const SIEVE_CAP: u64 = 1 << 40;

const SEGMENT: u64 = 1 << 18;

/// Base primes up to `√hi`, shared by every segment below `hi`.
#[derive(Debug, Clone)]
pub struct SegmentedSieve {
    base: Vec<u64>,
    limit: u64,
}

impl SegmentedSieve {
    pub fn new(limit: u64) -> Result<Self> {
        if limit > SIEVE_CAP {
            return Err(Error::RangeTooLarge {
                hi: limit,
                cap: SIEVE_CAP,
            });
        }
        let root = limit.isqrt() + 1;
        Ok(SegmentedSieve {
            base: small_primes(root),
            limit,
        })
    }

    /// Primes in `[lo, hi)`, ascending. `hi` must not exceed the sieve limit.
    pub fn primes_in(&self, lo: u64, hi: u64) -> Vec<u64> {
        assert!(hi <= self.limit, "segment end {hi} beyond sieve limit {}", self.limit);
        let lo = lo.max(2);
        let mut out = Vec::new();
        let mut seg_lo = lo;
        while seg_lo < hi {
            let seg_hi = (seg_lo + SEGMENT).min(hi);
            self.sieve_segment(seg_lo, seg_hi, &mut out);
            seg_lo = seg_hi;
        }
        out
    }

    fn sieve_segment(&self, lo: u64, hi: u64, out: &mut Vec<u64>) {
        let mut composite = vec![false; (hi - lo) as usize];
        for &q in &self.base {
            if q * q >= hi {
                break;
            }
            let start = (q * q).max(lo.div_ceil(q) * q);
            let mut m = start;
            while m < hi {
                composite[(m - lo) as usize] = true;
                m += q;
            }
        }
        out.extend(
            composite
                .iter()
                .enumerate()
                .filter(|(_, &c)| !c)
                .map(|(i, _)| lo + i as u64),
        );
    }
}

fn small_primes(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// The primes in `[lo, hi)`, ascending. `lo` below 2 is treated as 2.
pub fn primes_in_range(lo: u64, hi: u64) -> Result<Vec<u64>> {
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    Ok(SegmentedSieve::new(hi)?.primes_in(lo, hi))
}

/// Splits `[lo, hi)` into consecutive pieces of `size` integers (the last may be shorter).
pub(crate) fn chunk_ranges(lo: u64, hi: u64, size: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut a = lo;
    while a < hi {
        let b = a.saturating_add(size).min(hi);
        out.push((a, b));
        a = b;
    }
    out
}
