//! Short Weierstrass curves `y^2 = x^3 + Ax + B` over Q and their reductions.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, reduce_i128};
use crate::error::{Error, Result};

/// `-16(4A^3 + 27B^2)`, with overflow reported rather than wrapped.
pub fn discriminant(a: i64, b: i64) -> Result<i128> {
    let (a, b) = (a as i128, b as i128);
    let overflow = || Error::Overflow("discriminant");
    let a3 = a.checked_mul(a).and_then(|v| v.checked_mul(a)).ok_or_else(overflow)?;
    let b2 = b.checked_mul(b).ok_or_else(overflow)?;
    let inner = a3
        .checked_mul(4)
        .and_then(|x| b2.checked_mul(27).and_then(|y| x.checked_add(y)))
        .ok_or_else(overflow)?;
    inner.checked_mul(-16).ok_or_else(overflow)
}

/// Reduction type at a bad prime, as supplied by the user.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    Multiplicative,
    PotentiallyMultiplicative,
    /// Potentially good with abelian local Galois group; inertia cyclic of order `d`.
    PotentiallyGoodAbelian { d: u8 },
    PotentiallyGoodNonabelian,
}

impl ReductionKind {
    pub fn is_potentially_good(self) -> bool {
        matches!(
            self,
            ReductionKind::PotentiallyGoodAbelian { .. } | ReductionKind::PotentiallyGoodNonabelian
        )
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionKind::Multiplicative => f.write_str("multiplicative"),
            ReductionKind::PotentiallyMultiplicative => f.write_str("potentially_multiplicative"),
            ReductionKind::PotentiallyGoodAbelian { d } => {
                write!(f, "potentially_good_abelian_d{d}")
            }
            ReductionKind::PotentiallyGoodNonabelian => f.write_str("potentially_good_nonabelian"),
        }
    }
}

impl FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let kind = match s {
            "multiplicative" => ReductionKind::Multiplicative,
            "potentially_multiplicative" => ReductionKind::PotentiallyMultiplicative,
            "potentially_good_nonabelian" => ReductionKind::PotentiallyGoodNonabelian,
            other => {
                let d = other
                    .strip_prefix("potentially_good_abelian_d")
                    .and_then(|d| d.parse::<u8>().ok())
                    .ok_or_else(|| Error::InvalidBadPrime(format!("unknown reduction kind {other:?}")))?;
                if !matches!(d, 2 | 3 | 4 | 6) {
                    return Err(Error::InvalidBadPrime(format!(
                        "inertia order d = {d} must be one of 2, 3, 4, 6"
                    )));
                }
                ReductionKind::PotentiallyGoodAbelian { d }
            }
        };
        Ok(kind)
    }
}

impl Serialize for ReductionKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ReductionKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// User-supplied local data at one bad prime.
///
/// `beta`, `sign` and `eps` are only consulted by the symmetric-power code:
/// `beta` is the Frobenius parameter for the abelian potentially-good kind,
/// `sign` the `(±1)` of the non-abelian kind and `eps[n]` its tame exponent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BadPrimeSpec {
    pub p: u64,
    pub kind: ReductionKind,
    #[serde(default)]
    pub a_p1: i8,
    #[serde(default)]
    pub delta1_at_2: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<Vec<u32>>,
}

impl BadPrimeSpec {
    pub fn new(p: u64, kind: ReductionKind) -> Self {
        BadPrimeSpec {
            p,
            kind,
            a_p1: 0,
            delta1_at_2: 0,
            beta: None,
            sign: None,
            eps: None,
        }
    }

    pub fn with_a_p1(mut self, a_p1: i8) -> Self {
        self.a_p1 = a_p1;
        self
    }

    pub fn with_delta1_at_2(mut self, delta: u32) -> Self {
        self.delta1_at_2 = delta;
        self
    }

    pub fn with_beta(mut self, beta: Complex64) -> Self {
        self.beta = Some([beta.re, beta.im]);
        self
    }

    pub fn with_sign(mut self, sign: i8) -> Self {
        self.sign = Some(sign);
        self
    }

    pub fn with_eps(mut self, eps: Vec<u32>) -> Self {
        self.eps = Some(eps);
        self
    }

    pub fn beta_complex(&self) -> Option<Complex64> {
        self.beta.map(|[re, im]| Complex64::new(re, im))
    }

    fn validate(&self, disc: i128) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidBadPrime(format!("p = {}: {msg}", self.p)));
        if !is_prime(self.p) {
            return bad("not prime".into());
        }
        if disc % self.p as i128 != 0 {
            return bad("does not divide the discriminant".into());
        }
        if !matches!(self.a_p1, -1..=1) {
            return bad(format!("a_p1 = {} not in {{0, 1, -1}}", self.a_p1));
        }
        if self.p != 2 && self.delta1_at_2 != 0 {
            return bad("delta1_at_2 is only meaningful at p = 2".into());
        }
        if let Some(beta) = self.beta_complex() {
            let norm = beta.norm_sqr();
            if (norm - self.p as f64).abs() > 1e-9 * (self.p as f64) {
                return bad(format!("|beta|^2 = {norm} differs from p"));
            }
        }
        if let Some(sign) = self.sign {
            if sign != 1 && sign != -1 {
                return bad(format!("sign = {sign} is not ±1"));
            }
        }
        if let Some(eps) = &self.eps {
            if let Some((n, e)) = eps.iter().enumerate().find(|&(n, &e)| e as usize > n + 1) {
                return bad(format!("eps[{n}] = {e} exceeds n + 1"));
            }
        }
        Ok(())
    }
}

/// A nonsingular short Weierstrass curve over Q with integer coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveQ {
    label: String,
    a: i64,
    b: i64,
    disc: i128,
    bad_primes: Vec<BadPrimeSpec>,
}

impl CurveQ {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        Self::with_bad_primes(format!("[{a},{b}]"), a, b, Vec::new())
    }

    pub fn with_bad_primes(
        label: impl Into<String>,
        a: i64,
        b: i64,
        bad_primes: Vec<BadPrimeSpec>,
    ) -> Result<Self> {
        let disc = discriminant(a, b)?;
        if disc == 0 {
            return Err(Error::SingularCurve { a, b });
        }
        for (i, spec) in bad_primes.iter().enumerate() {
            spec.validate(disc)?;
            if bad_primes[..i].iter().any(|s| s.p == spec.p) {
                return Err(Error::InvalidBadPrime(format!("p = {} listed twice", spec.p)));
            }
        }
        Ok(CurveQ {
            label: label.into(),
            a,
            b,
            disc,
            bad_primes,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn disc(&self) -> i128 {
        self.disc
    }

    pub fn bad_primes(&self) -> &[BadPrimeSpec] {
        &self.bad_primes
    }

    pub fn bad_prime(&self, p: u64) -> Option<&BadPrimeSpec> {
        self.bad_primes.iter().find(|s| s.p == p)
    }

    /// True when `p` divides the discriminant of this model.
    pub fn has_bad_reduction(&self, p: u64) -> bool {
        self.disc % p as i128 == 0
    }

    pub fn reduce_mod_p(&self, p: u64) -> Result<ReducedCurve> {
        if !is_prime(p) {
            return Err(Error::InvalidPrime { p });
        }
        if self.has_bad_reduction(p) {
            return Err(Error::BadReduction { p });
        }
        Ok(ReducedCurve {
            p,
            a: reduce_i128(self.a as i128, p),
            b: reduce_i128(self.b as i128, p),
        })
    }
}

/// One line of a curve input file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveRecord {
    pub label: String,
    #[serde(rename = "A")]
    pub a: i64,
    #[serde(rename = "B")]
    pub b: i64,
    #[serde(default)]
    pub bad_primes: Vec<BadPrimeSpec>,
}

impl TryFrom<CurveRecord> for CurveQ {
    type Error = Error;

    fn try_from(r: CurveRecord) -> Result<Self> {
        let label = r.label.clone();
        CurveQ::with_bad_primes(r.label, r.a, r.b, r.bad_primes).map_err(|e| e.for_curve(&label))
    }
}

impl From<&CurveQ> for CurveRecord {
    fn from(c: &CurveQ) -> Self {
        CurveRecord {
            label: c.label.clone(),
            a: c.a,
            b: c.b,
            bad_primes: c.bad_primes.clone(),
        }
    }
}

/// `y^2 = x^3 + ax + b` over F_p with `p` not dividing the discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReducedCurve {
    pub(crate) p: u64,
    pub(crate) a: u64,
    pub(crate) b: u64,
}

impl ReducedCurve {
    /// Builds a reduced curve from residues directly; `None` when singular or `p` is not an odd prime.
    pub fn new(p: u64, a: u64, b: u64) -> Option<Self> {
        if p < 3 || !is_prime(p) {
            return None;
        }
        let (a, b) = (a % p, b % p);
        let c = crate::arith::mul_mod(crate::arith::mul_mod(a, a, p), a, p) as u128 * 4
            + crate::arith::mul_mod(b, b, p) as u128 * 27;
        if c.is_multiple_of(p as u128) {
            return None;
        }
        Some(ReducedCurve { p, a, b })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}
