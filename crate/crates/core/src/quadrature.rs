//! Adaptive Gauss–Kronrod integration.
//!
//! Every integral in the crate goes through one globally adaptive 21-point
//! Gauss–Kronrod driver. All panels of a problem, including the tail beyond
//! the last split point, share one priority queue ordered by error estimate,
//! so effort goes where the error is. A semi-infinite tail `[c, ∞)` is mapped
//! onto `[0, 1)` by `x = c + u/(1 − u)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt::Debug;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex;

use crate::error::{KoshError, Result};
use crate::Real;

/// Values an integrand may return: real scalars or complex numbers.
pub trait QuadValue<T: Real>:
    Copy + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<T, Output = Self>
{
    fn zero() -> Self;
    fn magnitude(self) -> T;
    fn finite(self) -> bool;
}

impl<T: Real> QuadValue<T> for T {
    fn zero() -> Self {
        T::zero()
    }
    fn magnitude(self) -> T {
        self.abs()
    }
    fn finite(self) -> bool {
        self.is_finite()
    }
}

impl<T: Real> QuadValue<T> for Complex<T> {
    fn zero() -> Self {
        Complex::new(T::zero(), T::zero())
    }
    fn magnitude(self) -> T {
        self.norm()
    }
    fn finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// How far a semi-infinite integral is carried.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Horizon<T> {
    /// Integrate over `[0, T]` only.
    Fixed(T),
    /// Integrate the whole tail through the rational map; no truncation.
    Auto,
}

/// Configuration of an adaptive integration.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadSpec<T> {
    pub abs_tol: T,
    pub rel_tol: T,
    pub max_subdivisions: usize,
    pub horizon: Horizon<T>,
    /// Interior points where a panel boundary is forced (kinks, sign changes).
    pub split_points: Vec<T>,
}

impl<T: Real> Default for QuadSpec<T> {
    fn default() -> Self {
        let tol = T::lit(1e-12).max(T::epsilon() * T::lit(64.0));
        QuadSpec {
            abs_tol: tol,
            rel_tol: tol,
            max_subdivisions: 2000,
            horizon: Horizon::Auto,
            split_points: Vec::new(),
        }
    }
}

impl<T: Real> QuadSpec<T> {
    pub fn new(abs_tol: T, rel_tol: T) -> Result<Self> {
        if !(abs_tol > T::zero()) || !(rel_tol > T::zero()) {
            return Err(KoshError::InvalidParameter(
                "quadrature tolerances must be positive".into(),
            ));
        }
        Ok(QuadSpec {
            abs_tol,
            rel_tol,
            ..Self::default()
        })
    }

    /// Tolerances close to working precision.
    pub fn tight() -> Self {
        let tol = T::lit(1e-14).max(T::epsilon() * T::lit(32.0));
        QuadSpec {
            abs_tol: tol,
            rel_tol: tol,
            ..Self::default()
        }
    }

    /// Same relative and absolute tolerance, floored at working precision.
    pub fn with_tol(tol: T) -> Self {
        let tol = tol.max(T::epsilon() * T::lit(32.0));
        QuadSpec {
            abs_tol: tol,
            rel_tol: tol,
            ..Self::default()
        }
    }

    pub fn splits(mut self, points: impl IntoIterator<Item = T>) -> Self {
        self.split_points.extend(points);
        self
    }

    pub fn horizon(mut self, horizon: Horizon<T>) -> Self {
        self.horizon = horizon;
        self
    }

    pub fn max_subdivisions(mut self, n: usize) -> Self {
        self.max_subdivisions = n.max(1);
        self
    }
}

/// Outcome of an integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T, V = T> {
    pub value: V,
    pub abs_err: T,
    pub nodes_used: usize,
    /// Upper end of the integration range (`∞` when the tail was mapped).
    pub truncation: T,
}

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_703_293_000,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Gauss weights for the odd-indexed Kronrod nodes `XGK[1], XGK[3], …, XGK[9]`.
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Variable on which a panel lives.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Chart<T> {
    Plain,
    /// `x = c + u/(1 − u)`, `u ∈ [0, 1)`.
    Tail(T),
}

#[derive(Debug, Clone, Copy)]
struct Panel<T, V> {
    a: T,
    b: T,
    chart: Chart<T>,
    value: V,
    err: T,
    /// Error cannot be reduced further at working precision.
    floor: bool,
}

struct ByError<T, V>(Panel<T, V>);

impl<T: Real, V> PartialEq for ByError<T, V> {
    fn eq(&self, other: &Self) -> bool {
        self.0.err == other.0.err
    }
}
impl<T: Real, V> Eq for ByError<T, V> {}
impl<T: Real, V> PartialOrd for ByError<T, V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Real, V> Ord for ByError<T, V> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.err.partial_cmp(&other.0.err).unwrap_or(Ordering::Equal)
    }
}

fn eval_chart<T: Real, V: QuadValue<T>>(
    f: &impl Fn(T) -> V,
    chart: Chart<T>,
    u: T,
) -> Result<V> {
    let v = match chart {
        Chart::Plain => f(u),
        Chart::Tail(c) => {
            let one_minus = T::one() - u;
            let x = c + u / one_minus;
            f(x) * (T::one() / (one_minus * one_minus))
        }
    };
    if v.finite() {
        Ok(v)
    } else {
        let x = match chart {
            Chart::Plain => u,
            Chart::Tail(c) => c + u / (T::one() - u),
        };
        Err(KoshError::NonFiniteIntegrand { x: x.as_f64() })
    }
}

fn gk21<T: Real, V: QuadValue<T>>(
    f: &impl Fn(T) -> V,
    a: T,
    b: T,
    chart: Chart<T>,
) -> Result<Panel<T, V>> {
    let half = (b - a) * T::lit(0.5);
    let center = (a + b) * T::lit(0.5);
    let fc = eval_chart(f, chart, center)?;
    let mut kronrod = fc * T::lit(WGK[10]);
    let mut gauss = V::zero();
    let mut samples = [(V::zero(), V::zero()); 10];
    for (i, slot) in samples.iter_mut().enumerate() {
        let dx = half * T::lit(XGK[i]);
        let f1 = eval_chart(f, chart, center - dx)?;
        let f2 = eval_chart(f, chart, center + dx)?;
        kronrod = kronrod + (f1 + f2) * T::lit(WGK[i]);
        if i % 2 == 1 {
            gauss = gauss + (f1 + f2) * T::lit(WG[i / 2]);
        }
        *slot = (f1, f2);
    }
    // QUADPACK-style error estimate.
    let mean = kronrod * T::lit(0.5);
    let mut resabs = fc.magnitude() * T::lit(WGK[10]);
    let mut resasc = (fc - mean).magnitude() * T::lit(WGK[10]);
    for (i, &(f1, f2)) in samples.iter().enumerate() {
        let w = T::lit(WGK[i]);
        resabs += (f1.magnitude() + f2.magnitude()) * w;
        resasc += ((f1 - mean).magnitude() + (f2 - mean).magnitude()) * w;
    }
    let habs = half.abs();
    let value = kronrod * half;
    let resabs = resabs * habs;
    let resasc = resasc * habs;
    let mut err = ((kronrod - gauss) * half).magnitude();
    if resasc > T::zero() && err > T::zero() {
        let ratio = (T::lit(200.0) * err / resasc).powf(T::lit(1.5));
        err = resasc * ratio.min(T::one());
    }
    let round = T::lit(50.0) * T::epsilon() * resabs;
    let floor = err <= round;
    if floor {
        err = round;
    }
    Ok(Panel {
        a,
        b,
        chart,
        value,
        err,
        floor,
    })
}

fn splittable<T: Real>(a: T, b: T) -> bool {
    let mid = (a + b) * T::lit(0.5);
    let scale = a.abs().max(b.abs()).max(T::min_positive_value());
    (b - a).abs() > T::lit(256.0) * T::epsilon() * scale && mid != a && mid != b
}

fn drive<T: Real, V: QuadValue<T>>(
    f: &impl Fn(T) -> V,
    seeds: Vec<(T, T, Chart<T>)>,
    spec: &QuadSpec<T>,
    truncation: T,
) -> Result<QuadResult<T, V>> {
    let mut heap = BinaryHeap::new();
    let mut settled: Vec<Panel<T, V>> = Vec::new();
    let mut evals = 0usize;
    for (a, b, chart) in seeds {
        if a == b {
            continue;
        }
        let panel = gk21(f, a, b, chart)?;
        evals += 21;
        heap.push(ByError(panel));
    }
    let totals = |heap: &BinaryHeap<ByError<T, V>>, settled: &[Panel<T, V>]| {
        let mut value = V::zero();
        let mut err = T::zero();
        for p in heap.iter().map(|b| &b.0).chain(settled.iter()) {
            value = value + p.value;
            err += p.err;
        }
        (value, err)
    };
    let mut subdivisions = 0usize;
    loop {
        let (value, err) = totals(&heap, &settled);
        let target = spec.abs_tol.max(spec.rel_tol * value.magnitude());
        if err <= target || heap.is_empty() {
            return Ok(QuadResult {
                value,
                abs_err: err,
                nodes_used: evals,
                truncation,
            });
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(KoshError::QuadratureBudget {
                subdivisions,
                value: value.magnitude().as_f64(),
                abs_err: err.as_f64(),
            });
        }
        // Refine the worst panels until the error budget could plausibly be met.
        let ByError(worst) = heap.pop().expect("heap not empty");
        if worst.floor || !splittable(worst.a, worst.b) {
            settled.push(worst);
            continue;
        }
        let mid = (worst.a + worst.b) * T::lit(0.5);
        let left = gk21(f, worst.a, mid, worst.chart)?;
        let right = gk21(f, mid, worst.b, worst.chart)?;
        evals += 42;
        subdivisions += 1;
        heap.push(ByError(left));
        heap.push(ByError(right));
    }
}

fn sorted_interior<T: Real>(points: &[T], a: T, b: T) -> Vec<T> {
    let mut inner: Vec<T> = points
        .iter()
        .copied()
        .filter(|&x| x > a && x < b && x.is_finite())
        .collect();
    inner.sort_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
    inner.dedup();
    inner
}

/// `∫_a^b f(x) dx` over a finite interval.
pub fn integrate_finite<T: Real, V: QuadValue<T>>(
    f: impl Fn(T) -> V,
    a: T,
    b: T,
    spec: &QuadSpec<T>,
) -> Result<QuadResult<T, V>> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(KoshError::InvalidParameter(
            "finite integration needs finite limits".into(),
        ));
    }
    if b < a {
        let r = integrate_finite(f, b, a, spec)?;
        return Ok(QuadResult {
            value: r.value * (-T::one()),
            ..r
        });
    }
    let mut cuts = vec![a];
    cuts.extend(sorted_interior(&spec.split_points, a, b));
    cuts.push(b);
    let seeds = cuts.windows(2).map(|w| (w[0], w[1], Chart::Plain)).collect();
    drive(&f, seeds, spec, b)
}

/// `∫_a^∞ f(x) dx`. Split points beyond `a` become panel boundaries; the tail
/// past the last of them (or past `a + 1`) is mapped onto `[0, 1)`.
pub fn integrate_from<T: Real, V: QuadValue<T>>(
    f: impl Fn(T) -> V,
    a: T,
    spec: &QuadSpec<T>,
) -> Result<QuadResult<T, V>> {
    if let Horizon::Fixed(end) = spec.horizon {
        if !(end > a) {
            return Err(KoshError::InvalidParameter(format!(
                "horizon {end} must exceed the lower limit {a}"
            )));
        }
        return integrate_finite(f, a, end, spec);
    }
    let mut cuts = vec![a];
    cuts.extend(sorted_interior(&spec.split_points, a, T::infinity()));
    if cuts.len() == 1 {
        cuts.push(a + T::one());
    }
    let c = *cuts.last().expect("non-empty");
    let mut seeds: Vec<_> = cuts.windows(2).map(|w| (w[0], w[1], Chart::Plain)).collect();
    // Two initial tail panels: the map is steep near u = 1.
    seeds.push((T::zero(), T::lit(0.5), Chart::Tail(c)));
    seeds.push((T::lit(0.5), T::one(), Chart::Tail(c)));
    drive(&f, seeds, spec, T::infinity())
}

/// `∫_0^∞ f(t) dt`.
pub fn integrate_semi_infinite<T: Real, V: QuadValue<T>>(
    f: impl Fn(T) -> V,
    spec: &QuadSpec<T>,
) -> Result<QuadResult<T, V>> {
    integrate_from(f, T::zero(), spec)
}

/// `∫_0^∞ g(y) dy` for a complex integrand parametrizing a vertical ray
/// `z = α ∓ iy`.
pub fn integrate_vertical_line<T: Real>(
    g: impl Fn(T) -> Complex<T>,
    spec: &QuadSpec<T>,
) -> Result<QuadResult<T, Complex<T>>> {
    integrate_from(g, T::zero(), spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn kronrod_weights_sum_to_two() {
        let k: f64 = 2.0 * WGK[..10].iter().sum::<f64>() + WGK[10];
        let g: f64 = 2.0 * WG.iter().sum::<f64>();
        assert!((k - 2.0).abs() < 1e-15);
        assert!((g - 2.0).abs() < 1e-15);
    }

    #[test]
    fn single_panel_exact_for_high_degree_polynomials() {
        let p = gk21(&|x: f64| x.powi(30), -1.0, 1.0, Chart::Plain).unwrap();
        assert!((p.value - 2.0 / 31.0).abs() < 1e-15);
    }

    #[test]
    fn bose_moment() {
        let spec = QuadSpec::default();
        let r = integrate_semi_infinite(|t: f64| t / (2.0 * PI * t).exp_m1().max(1e-300), &spec)
            .unwrap();
        assert!((r.value - 1.0 / 24.0).abs() < 1e-14);
        assert!(r.truncation.is_infinite());
    }

    #[test]
    fn fixed_horizon_truncates() {
        let spec = QuadSpec::default().horizon(Horizon::Fixed(2.0));
        let r = integrate_semi_infinite(|t: f64| (-t).exp(), &spec).unwrap();
        assert!((r.value - (1.0 - (-2.0f64).exp())).abs() < 1e-14);
        assert_eq!(r.truncation, 2.0);
    }

    #[test]
    fn reversed_limits_flip_sign() {
        let spec = QuadSpec::default();
        let r = integrate_finite(|x: f64| x.cos(), PI / 2.0, 0.0, &spec).unwrap();
        assert!((r.value + 1.0).abs() < 1e-15);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let spec = QuadSpec::default().max_subdivisions(3);
        let err = integrate_finite(|x: f64| (1.0 / x).sin(), 1e-6, 1.0, &spec).unwrap_err();
        assert!(matches!(err, KoshError::QuadratureBudget { .. }));
    }

    #[test]
    fn non_finite_sample_is_reported() {
        let spec = QuadSpec::default();
        let err = integrate_finite(|x: f64| if x > 0.7 { f64::NAN } else { x }, 0.0, 1.0, &spec)
            .unwrap_err();
        assert!(matches!(err, KoshError::NonFiniteIntegrand { .. }));
    }
}
