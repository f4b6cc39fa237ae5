use num_bigint::BigUint;
use num_complex::Complex64;
use proptest::prelude::*;

use extremal_core::curves::{BadPrimeSpec, CurveQ, ReductionKind};
use extremal_core::sympow::{
    bump_integral, conductor_bound, gamma_factor, lambda_sym_bad, lambda_sym_good, ln_gamma,
    psi_error_terms, psi_sym, smoothed_sum, SymPowLocalData,
};
use extremal_core::Execution;

#[test]
fn error_terms_stay_below_root_scale() {
    let e = CurveQ::new(1, 1).unwrap();
    let x = 1_000_000u64;
    for n in 0..=6usize {
        let t = psi_error_terms(&e, n, x / 2, 5 * x / 2, Execution::Parallel).unwrap();
        let size = (t.prime_powers + t.bad).abs();
        let limit = 10.0 * (n + 1) as f64 * (x as f64).sqrt();
        assert!(size <= limit, "n={n}: {size} > {limit}");
    }
}

#[test]
fn smoothed_prime_number_theorem() {
    let e = CurveQ::new(-1, 0).unwrap();
    for (x, tol) in [(1e4, 0.10), (1e6, 0.05)] {
        let ratio = smoothed_sum(&e, 0, x).unwrap() / (x * bump_integral());
        assert!((ratio - 1.0).abs() <= tol, "x={x}: {ratio}");
    }
}

#[test]
fn higher_sums_cancel_against_the_main_term() {
    // no main term for n ≥ 1: the sums are far smaller than x ∫g
    let e = CurveQ::new(1, 1).unwrap();
    let x = 1e5;
    let main = x * bump_integral();
    for n in 1..=4 {
        let s = smoothed_sum(&e, n, x).unwrap();
        assert!(s.abs() < 0.1 * main, "n={n}: {s}");
    }
}

#[test]
fn psi_grows_like_x_only_for_trivial_power() {
    let e = CurveQ::new(1, 1).unwrap();
    let (psi0, _) = psi_sym(&e, 0, 20_000.0).unwrap();
    assert!((psi0 / 20_000.0 - 1.0).abs() < 0.02);
    let (psi2, _) = psi_sym(&e, 2, 20_000.0).unwrap();
    assert!(psi2.abs() < 0.1 * psi0);
}

#[test]
fn conductor_of_multiplicative_curve() {
    let spec = BadPrimeSpec::new(37, ReductionKind::Multiplicative).with_a_p1(-1);
    let e = CurveQ::with_bad_primes("37a", -16, 16, vec![spec]).unwrap();
    assert_eq!(conductor_bound(&e, 3).exact, Some(BigUint::from(50_653u32)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn good_coefficients_bounded(n in 0usize..=50, m in 1u32..8, theta in 0.0f64..=std::f64::consts::PI, p in 5u64..100_000) {
        let v = lambda_sym_good(n, p, m, theta);
        prop_assert!(v.abs() <= (n + 1) as f64 * (p as f64).ln());
    }

    #[test]
    fn abelian_coefficients_bounded(phase in -3.2f64..3.2, d in prop::sample::select(vec![2u8, 3, 4, 6]), n in 0u32..12, m in 1u32..6) {
        let p = 13u64;
        let spec = BadPrimeSpec::new(p, ReductionKind::PotentiallyGoodAbelian { d })
            .with_beta(Complex64::from_polar((p as f64).sqrt(), phase));
        let data = SymPowLocalData::from_spec(&spec, n).unwrap();
        let v = lambda_sym_bad(&data, m).unwrap();
        prop_assert!(v.abs() <= (n + 1) as f64 * (p as f64).ln());
    }

    #[test]
    fn gamma_factor_recurrence_for_trivial_power(re in 0.2f64..30.0, im in -30.0f64..30.0) {
        // γ(s+2, Sym^0) = γ(s, Sym^0) · (s/2) / π
        let s = Complex64::new(re, im);
        let a = gamma_factor(0, s + 2.0).unwrap();
        let b = gamma_factor(0, s).unwrap();
        let want = (s / 2.0).ln() - std::f64::consts::PI.ln();
        prop_assert!((a.log_abs - b.log_abs - want.re).abs() < 1e-9);
        let dphase = (a.arg - b.arg - want.im).rem_euclid(2.0 * std::f64::consts::PI);
        prop_assert!(dphase.min(2.0 * std::f64::consts::PI - dphase) < 1e-9);
    }

    #[test]
    fn ln_gamma_reflection(re in -5.0f64..5.0, im in 0.1f64..10.0) {
        let z = Complex64::new(re, im);
        let lhs = (ln_gamma(z).unwrap() + ln_gamma(1.0 - z).unwrap()).exp();
        let rhs = std::f64::consts::PI / (z * std::f64::consts::PI).sin();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * rhs.norm());
    }
}
