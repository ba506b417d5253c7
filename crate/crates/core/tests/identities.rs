use std::f64::consts::PI;

use koshliakov::identities::{
    default_tol, f_p_spectral, g_alpha, page220_constant, suite_cases, verify, verify_glaisher_apostol,
    verify_mellin_334, verify_page220, verify_ramanujan_odd, VerifyParams, IDENTITY_IDS,
};
use koshliakov::roots::{EigenTable, KoshParam};
use koshliakov::series::phi_sum;
use koshliakov::special::{euler_const_1, euler_const_2};
use koshliakov::KoshError;
use num_complex::Complex64;

#[test]
fn standard_suite_passes() {
    for case in suite_cases() {
        let r = verify(case.id, &case.params).unwrap_or_else(|e| panic!("{}: {e}", case.id));
        assert!(r.pass, "{} failed: {r:#?}", case.id);
    }
}

#[test]
fn suite_covers_every_registered_identity() {
    let cases = suite_cases();
    for id in IDENTITY_IDS {
        assert!(cases.iter().any(|c| c.id == id), "{id} missing from suite");
    }
}

#[test]
fn reports_satisfy_their_invariants() {
    for case in suite_cases().into_iter().take(12) {
        let r = verify(case.id, &case.params).unwrap();
        assert!(r.sides.len() >= 2);
        let within = r.max_abs_dev <= r.tol || r.max_rel_dev <= r.tol;
        assert!(!r.pass || within);
        assert_eq!(r.tol, default_tol(case.id).unwrap());
    }
}

#[test]
fn verification_is_deterministic() {
    let params = VerifyParams {
        alpha: 1.5,
        ..VerifyParams::default()
    };
    let a = verify("page220", &params).unwrap();
    let b = verify("page220", &params).unwrap();
    assert_eq!(a, b);
}

#[test]
fn spectral_side_is_symmetric_under_inversion() {
    let p = KoshParam::Finite(1.0);
    let a = f_p_spectral(p, 0.5 * 2f64.ln(), 1e-9).unwrap().value;
    let b = f_p_spectral(p, 0.5 * 0.5f64.ln(), 1e-9).unwrap().value;
    assert_eq!(a.to_bits(), b.to_bits());
}

/// Without the `B₀ log B₀` shift the α and 1/α sides move by different
/// amounts, so the defining-limit constant alone cannot satisfy the relation.
#[test]
fn page220_needs_the_shifted_constant() {
    let t = EigenTable::new(KoshParam::Finite(1.0)).unwrap();
    let eps = 1e-11;
    let unshifted = euler_const_1(&t, eps).unwrap() + euler_const_2(&t, eps).unwrap();
    let shifted = page220_constant(&t, eps).unwrap();
    let side = |consts: f64, a: f64| {
        let b0 = t.b0();
        a.sqrt() * ((consts - (1.0 + b0) * (2.0 * PI * a).ln()) / (2.0 * a) + phi_sum(&t, a, eps).unwrap())
    };
    assert!((side(shifted, 2.0) - side(shifted, 0.5)).abs() < 1e-9);
    assert!((side(unshifted, 2.0) - side(unshifted, 0.5)).abs() > 1e-2);
    let r = verify_page220(KoshParam::Finite(1.0), 2.0, 1e-6, true).unwrap();
    assert!(r.pass);
    assert_eq!(r.sides.len(), 4);
}

#[test]
fn invalid_parameters_are_rejected() {
    let p = KoshParam::Finite(1.0);
    assert!(matches!(verify_ramanujan_odd(p, 0, 1.0, 1e-8), Err(KoshError::InvalidParameter(_))));
    assert!(matches!(verify_ramanujan_odd(p, 1, -1.0, 1e-8), Err(KoshError::Domain(_))));
    assert!(matches!(verify_glaisher_apostol(p, 1, 1e-8), Err(KoshError::InvalidParameter(_))));
    assert!(matches!(
        verify_mellin_334(p, Complex64::new(0.5, 0.0), 1e-8),
        Err(KoshError::Domain(_))
    ));
    assert!(matches!(verify("zeta5", &VerifyParams::default()), Err(KoshError::UnknownId(_))));
}

#[test]
fn auxiliary_integral_vanishes() {
    for a in [0.5, 1.0, 2.0] {
        assert!(g_alpha(a, 1e-13).unwrap().abs() < 1e-9);
    }
}

#[test]
fn symmetric_points_are_trivial() {
    let r = verify(
        "dedekind",
        &VerifyParams {
            p: KoshParam::Infinity,
            alpha: PI,
            ..VerifyParams::default()
        },
    )
    .unwrap();
    assert!(r.sides.iter().all(|s| s.value.norm() < 1e-15));
    let r = verify(
        "kosh-theta",
        &VerifyParams {
            a: PI.sqrt(),
            ..VerifyParams::default()
        },
    )
    .unwrap();
    // b = π/a reproduces √π only up to rounding
    assert!((r.sides[0].value - r.sides[1].value).norm() < 1e-14);
}
