//! Frobenius traces, extremal-prime scans, Sato-Tate interval approximations
//! and symmetric-power explicit-formula sums for elliptic curves over `Q`.

pub mod arith;
pub mod curves;
pub mod error;
pub mod fmt;
pub mod par;
pub mod point_count;
pub mod prime_scan;
pub mod quadrature;
pub mod st_approx;
pub mod sympow;

pub use curves::{BadPrimeSpec, CurveQ, CurveRecord, ReducedCurve, ReductionKind};
pub use error::{Error, Result};
pub use par::Execution;
pub use point_count::{trace_of_frobenius, FrobeniusTrace};
pub use prime_scan::{scan, scan_with, Extremal, ScanReport, TraceRecord};
