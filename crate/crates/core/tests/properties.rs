use std::f64::consts::PI;

use koshliakov::kzeta::{big_xi_p, xi_p, zeta_p};
use koshliakov::roots::{EigenTable, KoshParam};
use koshliakov::series::lambert_sum;
use koshliakov::special::{gen_bernoulli, phi_1p, phi_2p};
use koshliakov::kzeta::eta_p;
use num_complex::Complex64;
use proptest::prelude::*;

fn table(p: f64) -> EigenTable {
    EigenTable::new(KoshParam::Finite(p)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn roots_are_bracketed_with_small_residual(log_p in -3.0f64..3.0, j in 1usize..400) {
        let p = 10f64.powf(log_p);
        let t = table(p);
        let l = t.lambda(j);
        prop_assert!(l > j as f64 - 0.5 && l < j as f64);
        let resid = (p * (PI * l).sin() + l * (PI * l).cos()).abs();
        prop_assert!(resid <= 1e-12 * (1.0 + l), "residual {resid}");
        let w = t.weight(j);
        prop_assert!(w > 0.0 && w < 1.0);
    }

    #[test]
    fn phi_bounds(log_p in -1.0f64..1.3, x in 0.2f64..30.0) {
        let p = 10f64.powf(log_p);
        let t = table(p);
        let z2 = zeta_p(&t, Complex64::new(2.0, 0.0), 1e-12).unwrap().value.re;
        prop_assert!(phi_1p(&t, x, 1e-12).unwrap().abs() <= 1.0 / (12.0 * x * x));
        prop_assert!(phi_2p(&t, x, 1e-12).unwrap().abs() <= 2.0 * z2 / (x * x));
    }

    #[test]
    fn big_xi_is_even(p in 0.2f64..8.0, tt in 0.0f64..15.0) {
        let t = table(p);
        let a = big_xi_p(&t, tt, 1e-12).unwrap();
        let b = big_xi_p(&t, -tt, 1e-12).unwrap();
        prop_assert!((a - b).abs() <= 1e-10 * (1.0 + a.abs()));
    }

    #[test]
    fn xi_is_self_dual(p in 0.2f64..8.0, re in -1.0f64..2.0, im in 0.5f64..6.0) {
        let t = table(p);
        let s = Complex64::new(re, im);
        let a = xi_p(&t, s, 1e-12).unwrap();
        let b = xi_p(&t, Complex64::new(1.0, 0.0) - s, 1e-12).unwrap();
        prop_assert!((a - b).norm() <= 1e-8 * (1.0 + a.norm()), "{a} vs {b}");
    }

    #[test]
    fn lambert_tail_bound_is_honest(p in 0.1f64..20.0, m in -3i32..4, alpha in 0.3f64..6.0) {
        let t = table(p);
        let coarse = lambert_sum(&t, m, alpha, 1e-8).unwrap();
        let fine = lambert_sum(&t, m, alpha, 1e-16).unwrap();
        prop_assert!((coarse.value - fine.value).abs() <= coarse.tail_bound + 1e-15);
    }
}

#[test]
fn eta_at_negative_odd_integers() {
    for p in [0.5, 1.0, 5.0] {
        let t = table(p);
        for k in 1..=3 {
            let eta = eta_p(&t, Complex64::new(1.0 - 2.0 * k as f64, 0.0), 1e-13).unwrap().value;
            let b = gen_bernoulli(&t, k, 1e-13).unwrap();
            assert!((eta.re + b / (2.0 * k as f64)).abs() < 1e-10, "p={p} k={k}");
        }
    }
}

#[test]
fn eta_mellin_handles_small_real_part() {
    let t = table(0.2);
    let s = Complex64::new(0.0435928033679587, 0.5);
    let mellin = eta_p(&t, s, 1e-13).unwrap().value;
    let a = xi_p(&t, s, 1e-12).unwrap();
    let b = xi_p(&t, Complex64::new(1.0, 0.0) - s, 1e-12).unwrap();
    assert!(mellin.is_finite());
    assert!((a - b).norm() <= 1e-9 * (1.0 + a.norm()));
}
