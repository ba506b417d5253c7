//! Frozen values from independent oracles (`tools/oracles/*.py`, mpmath).

#![allow(clippy::excessive_precision)]

use approx::assert_relative_eq;
use koshliakov::identities::{f_p_spectral, omega_sum, verify_kosh_hardy, verify_kosh_theta};
use koshliakov::kzeta::zeta_p;
use koshliakov::roots::{EigenTable, KoshParam};
use koshliakov::special::{euler_const_2, euler_const_2_series};
use num_complex::Complex64;

/// `(λ_j, w_j)` for j = 1..10 from 50-digit bisection.
const ROOTS: [(f64, [(f64, f64); 10]); 4] = [
    (
        1.0,
        [
            (0.78763729416486394743, 0.83581122556393326456),
            (1.6716056254047775173, 0.92260083607071340946),
            (2.6162135854304910878, 0.96100521468141668314),
            (3.5865527464439610556, 0.97755483837915939497),
            (4.5685917455645756399, 0.98565547530573084029),
            (5.5566775369697665289, 0.99011305693392555688),
            (6.5482373301967522374, 0.99279804769013574373),
            (7.541960438683207648, 0.99453070883452125221),
            (8.5371162730812879841, 0.99571014774805499377),
            (9.5332677182844395875, 0.99654767140579534266),
        ],
    ),
    (
        2.0,
        [
            (0.86946572977853725072, 0.88194546184963357313),
            (1.7694449431360641499, 0.9180411651177169669),
            (2.7027813547862483736, 0.94668911401062018064),
            (3.6592192125366893867, 0.96468423736380460964),
            (4.6297977067812862992, 0.97558191154283643567),
            (5.6090256460835287722, 0.9823640228574467259),
            (6.5937416160563603221, 0.98676852613247507971),
            (7.582093667822301464, 0.98975256033603596271),
            (8.5729542551045972417, 0.99185201412258706838),
            (9.5656078578751063306, 0.99337802680437060754),
        ],
    ),
    (
        0.5,
        [
            (0.69788692189820850114, 0.82241157336629354658),
            (1.596603967706029617, 0.94620052476234802608),
            (2.5613650671934800645, 0.97716488603436529915),
            (3.544606296865824826, 0.98773219963987196475),
            (4.5349539831741448319, 0.99241214650366954238),
            (5.5287089013132225652, 0.9948619547851518708),
            (6.5243464172008829319, 0.99629667690960296511),
            (7.5211299501254405611, 0.99720665885840734564),
            (8.5186616817966948065, 0.99781910075217494708),
            (9.5167083761492931979, 0.99825060037346551538),
        ],
    ),
    (
        10.0,
        [
            (0.969244073389904321, 0.96942929861487852401),
            (1.9390351447964704232, 0.97023554447815611948),
            (2.9098650930075353042, 0.97149048753386333017),
            (3.8821285970150005833, 0.97308253176767714163),
            (4.8561017697852647912, 0.97488973060530790197),
            (5.8319417342723599812, 0.97679866512025734253),
            (6.8097016915737677889, 0.97871621833134867406),
            (7.7893539607053433971, 0.98057393789097663886),
            (8.7708144451143160733, 0.9823269456059191797),
            (9.7539643451152510404, 0.9839499192884478415),
        ],
    ),
];

fn table(p: f64) -> EigenTable {
    EigenTable::new(KoshParam::Finite(p)).unwrap()
}

#[test]
fn roots_and_weights_match_bisection_oracle() {
    for (p, rows) in ROOTS {
        let t = table(p);
        for (j, &(lambda, w)) in rows.iter().enumerate() {
            assert_relative_eq!(t.lambda(j + 1), lambda, max_relative = 1e-14);
            assert_relative_eq!(t.weight(j + 1), w, max_relative = 1e-14);
        }
    }
}

#[test]
fn zeta_p_at_two_matches_closed_form() {
    let expected = [
        (0.25, 3.082294257915570566828673),
        (1.0, 2.138007267044298780411838),
        (4.0, 1.775122528767080739950321),
    ];
    for (p, v) in expected {
        let z = zeta_p(&table(p), Complex64::new(2.0, 0.0), 1e-14).unwrap().value;
        assert_relative_eq!(z.re, v, max_relative = 1e-13);
        assert!(z.im.abs() < 1e-15);
    }
}

/// The defining limit of the second Euler constant differs from the
/// Frullani-type integral by `B₀ log B₀`; the oracle evaluates both.
#[test]
fn second_euler_constant_matches_limit_oracle() {
    let expected = [
        (0.25, -0.19313028748807113665, 0.16811889465664731417),
        (1.0, 0.22099171052664100464, 0.43061657175321104107),
        (4.0, 0.46351665613152972172, 0.53444230672517350597),
    ];
    for (p, integral, limit) in expected {
        let t = table(p);
        let b0 = t.b0();
        let c2 = euler_const_2(&t, 1e-13).unwrap();
        assert!((c2 - limit).abs() < 1e-11, "p={p}: {c2} vs {limit}");
        assert!((c2 + b0 * b0.ln() - integral).abs() < 1e-11);
    }
    // direct limit with three Richardson levels over n = 100..800
    let series = euler_const_2_series(&table(1.0), 40, 1e-13).unwrap();
    assert!((series - 0.43061657175199).abs() < 1e-11, "{series}");
}

#[test]
fn zero_limit_koshliakov_left_sides() {
    let theta = verify_kosh_theta(KoshParam::Zero, 1.0, 1e-8).unwrap();
    assert!((theta.sides[0].value.re + 0.06816432507246848057935911).abs() < 1e-12);
    let hardy = verify_kosh_hardy(KoshParam::Zero, 1.0, 1e-8).unwrap();
    assert!((hardy.sides[0].value.re - 0.6837030752360681051853245).abs() < 1e-11);
}

#[test]
fn digamma_series_sums() {
    assert!((omega_sum(2.0).unwrap() + 0.1473968228405524704).abs() < 1e-13);
    assert!((omega_sum(0.5).unwrap() + 1.8695374462191125535).abs() < 1e-13);
}

#[test]
fn classical_spectral_integral() {
    let f = f_p_spectral(KoshParam::Infinity, 0.0, 1e-12).unwrap();
    assert!((f.value - 4.235612178125198).abs() < 1e-11, "{}", f.value);
    assert!(f.truncation <= 60.0);
}
