//! `#E(F_p)` and the trace of Frobenius.
//!
//! Small primes are counted directly with a character sum. Above the
//! crossover the group order is pinned down inside the Hasse interval by
//! baby-step/giant-step on random points of the curve and of its quadratic
//! twist, intersecting the candidate sets until one remains.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{add_mod, inv_mod, legendre, mul_mod, non_residue, sqrt_mod, sub_mod};
use crate::curves::{CurveQ, ReducedCurve};
use crate::error::{Error, Result};

/// Primes below this are counted naively.
pub const NAIVE_CROSSOVER: u64 = 1 << 14;

/// When BSGS cannot settle the order, primes below this fall back to the naive count.
pub const NAIVE_FALLBACK_LIMIT: u64 = 1 << 24;

const MAX_BSGS_POINTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusTrace {
    pub p: u64,
    pub a_p: i64,
}

/// `⌊√n⌋`, exactly.
#[inline]
pub fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

/// `[2√p] = ⌊√(4p)⌋`.
#[inline]
pub fn hasse_width(p: u64) -> i64 {
    isqrt(4 * p) as i64
}

/// `#E(F_p)` including the point at infinity, as `1 + Σ_x (1 + χ(x^3 + ax + b))`.
pub fn count_points_naive(curve: &ReducedCurve) -> u64 {
    let (p, a, b) = (curve.p, curve.a, curve.b);
    let chi: Box<dyn Fn(u64) -> i64> = if p < NAIVE_CROSSOVER {
        let mut squares = vec![false; p as usize];
        for y in 0..p {
            squares[mul_mod(y, y, p) as usize] = true;
        }
        Box::new(move |v: u64| match v {
            0 => 0,
            v if squares[v as usize] => 1,
            _ => -1,
        })
    } else {
        Box::new(move |v: u64| legendre(v, p) as i64)
    };
    let mut total: i64 = 1;
    for x in 0..p {
        let x2 = mul_mod(x, x, p);
        let rhs = add_mod(mul_mod(add_mod(x2, a, p), x, p), b, p);
        total += 1 + chi(rhs);
    }
    total as u64
}

/// Which counting route to take for a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceStrategy {
    /// Primes strictly below this use the naive count.
    pub naive_below: u64,
    /// Primes below this may fall back to naive counting when BSGS stays ambiguous.
    pub fallback_below: u64,
}

impl Default for TraceStrategy {
    fn default() -> Self {
        TraceStrategy {
            naive_below: NAIVE_CROSSOVER,
            fallback_below: NAIVE_FALLBACK_LIMIT,
        }
    }
}

impl TraceStrategy {
    /// Always BSGS, falling back to the naive count only when the order stays ambiguous.
    pub fn bsgs_only() -> Self {
        TraceStrategy {
            naive_below: 0,
            fallback_below: NAIVE_FALLBACK_LIMIT,
        }
    }
}

/// `a_p = p + 1 - #E(F_p)` for a good prime `p > 3`.
pub fn trace_of_frobenius(curve: &CurveQ, p: u64) -> Result<FrobeniusTrace> {
    trace_of_frobenius_with(curve, p, TraceStrategy::default())
}

pub fn trace_of_frobenius_with(
    curve: &CurveQ,
    p: u64,
    strategy: TraceStrategy,
) -> Result<FrobeniusTrace> {
    if p <= 3 {
        return Err(Error::Domain(format!("trace_of_frobenius needs p > 3, got {p}")));
    }
    let reduced = curve.reduce_mod_p(p)?;
    let a_p = reduced_trace(&reduced, strategy)?;
    if (a_p as i128) * (a_p as i128) > 4 * p as i128 {
        return Err(Error::HasseViolation { p, a_p });
    }
    Ok(FrobeniusTrace { p, a_p })
}

pub(crate) fn reduced_trace(curve: &ReducedCurve, strategy: TraceStrategy) -> Result<i64> {
    let p = curve.p;
    if p < strategy.naive_below {
        return Ok(p as i64 + 1 - count_points_naive(curve) as i64);
    }
    match trace_bsgs(curve) {
        Err(Error::AmbiguousOrder { .. }) if p < strategy.fallback_below => {
            Ok(p as i64 + 1 - count_points_naive(curve) as i64)
        }
        other => other,
    }
}

/// The trace via order searches in the Hasse interval; never guesses.
///
/// Returns [`Error::AmbiguousOrder`] when the points tried leave more than
/// one admissible group order, which can only happen for small `p`.
pub fn trace_bsgs(curve: &ReducedCurve) -> Result<i64> {
    let p = curve.p;
    let width = hasse_width(p);
    let twist = curve.quadratic_twist();
    let mut rng = ChaCha8Rng::seed_from_u64(p ^ curve.a.rotate_left(21) ^ curve.b.rotate_left(42));

    let mut candidates: Option<Vec<i64>> = None;
    for round in 0..MAX_BSGS_POINTS {
        // even rounds on E, odd rounds on the twist, whose trace is -a_p
        let on_twist = round % 2 == 1;
        let c = if on_twist { &twist } else { curve };
        let point = c.random_point(&mut rng);
        let traces = c.admissible_traces(point, width);
        let traces = if on_twist {
            let mut t: Vec<i64> = traces.into_iter().map(|t| -t).collect();
            t.reverse();
            t
        } else {
            traces
        };
        let next = match candidates.take() {
            None => traces,
            Some(prev) => intersect_sorted(&prev, &traces),
        };
        match next.len() {
            0 => unreachable!("true trace always survives (p = {p})"),
            1 => return Ok(next[0]),
            _ => candidates = Some(next),
        }
    }
    Err(Error::AmbiguousOrder {
        p,
        points: MAX_BSGS_POINTS,
    })
}

fn intersect_sorted(a: &[i64], b: &[i64]) -> Vec<i64> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Point {
    Infinity,
    Affine(u64, u64),
}

impl ReducedCurve {
    fn quadratic_twist(&self) -> ReducedCurve {
        let p = self.p;
        let d = non_residue(p);
        let d2 = mul_mod(d, d, p);
        ReducedCurve {
            p,
            a: mul_mod(self.a, d2, p),
            b: mul_mod(self.b, mul_mod(d2, d, p), p),
        }
    }

    fn rhs(&self, x: u64) -> u64 {
        let p = self.p;
        add_mod(mul_mod(add_mod(mul_mod(x, x, p), self.a, p), x, p), self.b, p)
    }

    fn random_point(&self, rng: &mut ChaCha8Rng) -> Point {
        loop {
            let x = rng.random_range(0..self.p);
            if let Some(y) = sqrt_mod(self.rhs(x), self.p) {
                let y = if rng.random::<bool>() { y } else { (self.p - y) % self.p };
                return Point::Affine(x, y);
            }
        }
    }

    fn neg(&self, pt: Point) -> Point {
        match pt {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(x, (self.p - y) % self.p),
        }
    }

    fn add(&self, lhs: Point, rhs: Point) -> Point {
        let p = self.p;
        let (x1, y1, x2, y2) = match (lhs, rhs) {
            (Point::Infinity, q) | (q, Point::Infinity) => return q,
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if add_mod(y1, y2, p) == 0 {
                return Point::Infinity;
            }
            let num = add_mod(mul_mod(3, mul_mod(x1, x1, p), p), self.a, p);
            let den = inv_mod(add_mod(y1, y1, p), p).expect("2y invertible");
            mul_mod(num, den, p)
        } else {
            let den = inv_mod(sub_mod(x2, x1, p), p).expect("x2 - x1 invertible");
            mul_mod(sub_mod(y2, y1, p), den, p)
        };
        let x3 = sub_mod(sub_mod(mul_mod(slope, slope, p), x1, p), x2, p);
        let y3 = sub_mod(mul_mod(slope, sub_mod(x1, x3, p), p), y1, p);
        Point::Affine(x3, y3)
    }

    fn mul(&self, pt: Point, k: u64) -> Point {
        let mut acc = Point::Infinity;
        let mut base = pt;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// Smallest divisor `d` of `multiple` with `[d]P = O`.
    fn exact_order(&self, pt: Point, multiple: u64) -> u64 {
        let mut order = multiple;
        let mut f = 2;
        let mut rest = multiple;
        while f * f <= rest {
            while rest.is_multiple_of(f) {
                rest /= f;
                while order.is_multiple_of(f) && self.mul(pt, order / f) == Point::Infinity {
                    order /= f;
                }
            }
            f += 1;
        }
        if rest > 1 && order.is_multiple_of(rest) && self.mul(pt, order / rest) == Point::Infinity {
            order /= rest;
        }
        order
    }

    /// All `t` with `|t| ≤ width` and `[p + 1 - t]P = O`, ascending.
    fn admissible_traces(&self, pt: Point, width: i64) -> Vec<i64> {
        let p = self.p;
        let from_order = |order: u64| -> Vec<i64> {
            // t ≡ p + 1 (mod order)
            let order = order as i64;
            let r = ((p as i64 + 1) % order + order) % order;
            let start = -width + (r - (-width)).rem_euclid(order);
            (0..)
                .map(|k| start + k * order)
                .take_while(|&t| t <= width)
                .collect()
        };

        let m = isqrt(width as u64) + 1;
        let mut table: HashMap<u64, (u64, u64)> = HashMap::with_capacity(m as usize);
        let mut cur = Point::Infinity;
        for j in 1..=m {
            cur = self.add(cur, pt);
            match cur {
                Point::Infinity => return from_order(j),
                Point::Affine(x, y) => {
                    if y == 0 {
                        return from_order(self.exact_order(pt, 2 * j));
                    }
                    if let Some(&(j0, _)) = table.get(&x) {
                        // [j]P = ±[j0]P; the + case would have hit infinity earlier
                        return from_order(self.exact_order(pt, j + j0));
                    }
                    table.insert(x, (j, y));
                }
            }
        }

        // ord(P) > 2m: every t = i*s + j with |j| ≤ m is found exactly once
        let s = 2 * m + 1;
        let i_max = (width as u64 + m).div_ceil(s) as i64;
        let step = self.mul(pt, s);
        let neg_step = self.neg(step);
        // G_i = [p + 1]P - [i * s]P, starting from i = -i_max
        let mut giant = self.add(self.mul(pt, p + 1), self.mul(step, i_max as u64));
        let mut out = Vec::new();
        for i in -i_max..=i_max {
            let base = i * s as i64;
            let j: Option<i64> = match giant {
                Point::Infinity => Some(0),
                Point::Affine(x, y) => table.get(&x).map(|&(j, yj)| {
                    if yj == y {
                        j as i64
                    } else {
                        -(j as i64)
                    }
                }),
            };
            if let Some(j) = j {
                let t = base + j;
                if t.abs() <= width {
                    out.push(t);
                }
            }
            giant = self.add(giant, neg_step);
        }
        out
    }
}
