use std::f64::consts::PI;

use proptest::prelude::*;

use extremal_core::st_approx::{
    bounds_check, chebyshev_u, majorant, minorant, mu_st, sandwich_margin, Interval, Side,
};

fn interval() -> impl Strategy<Value = Interval> {
    (0.0..PI, 0.0..PI).prop_map(|(x, y)| Interval::new(x.min(y), x.max(y)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sandwich_and_bounds_hold(i in interval(), m in 1usize..60) {
        prop_assume!(i.length() > 1e-3);
        for poly in [majorant(i, m).unwrap(), minorant(i, m).unwrap()] {
            let check = bounds_check(&poly).unwrap();
            prop_assert!(check.constant_term.pass, "{:?}", check.constant_term);
            prop_assert!(check.coefficients.pass, "{:?}", check.coefficients);
            let s = sandwich_margin(&poly, 2_000, 1e-6);
            prop_assert!(s.pass, "{:?} {:?}", poly.side(), s);
        }
    }

    #[test]
    fn constant_terms_bracket_the_measure(i in interval(), m in 1usize..40) {
        let lo = minorant(i, m).unwrap();
        let hi = majorant(i, m).unwrap();
        prop_assert_eq!(lo.side(), Side::Minorant);
        prop_assert!(lo.coeffs()[0] <= mu_st(i) + 1e-12);
        prop_assert!(mu_st(i) <= hi.coeffs()[0] + 1e-12);
    }

    #[test]
    fn chebyshev_bounded_by_degree(n in 0usize..200, x in -1.0f64..=1.0) {
        prop_assert!(chebyshev_u(n, x).abs() <= (n + 1) as f64 * (1.0 + 1e-12));
    }

    #[test]
    fn mu_st_is_additive(a in 0.0..PI, t in 0.0f64..1.0, b in 0.0..PI) {
        let (a, b) = (a.min(b), a.max(b));
        let c = a + t * (b - a);
        let whole = mu_st(Interval::new(a, b).unwrap());
        let parts = mu_st(Interval::new(a, c).unwrap()) + mu_st(Interval::new(c, b).unwrap());
        prop_assert!((whole - parts).abs() < 1e-12);
    }
}

#[test]
fn polynomial_evaluation_matches_kernel_on_random_intervals() {
    let i = Interval::new(0.25, 2.75).unwrap();
    for m in [3usize, 30, 120] {
        for poly in [majorant(i, m).unwrap(), minorant(i, m).unwrap()] {
            for k in 0..=300 {
                let theta = PI * k as f64 / 300.0;
                assert!((poly.eval(theta) - poly.eval_kernel(theta)).abs() < 1e-9);
            }
        }
    }
}
