//! Verifier registry: each identity is checked by evaluating every side
//! through its own code path and comparing.
//!
//! Everything here is `f64`; the registry is an artifact-level surface.

use std::f64::consts::{LN_2, PI, SQRT_2};
use std::cell::RefCell;
use std::fmt;

use num_complex::Complex64;

use crate::classical::{self, gamma_c, hurwitz_tail, ln_gamma_c, EULER_GAMMA};
use crate::error::{KoshError, Result};
use crate::kzeta::{big_xi_p, classical_big_xi, eta_p, zeta_p, zeta_p_contour};
use crate::quadrature::{integrate_from, Horizon, QuadResult, QuadSpec};
use crate::roots::{EigenTable, KoshParam};
use crate::series::{lambert_sum, lambert_sum_positive, phi_sum};
use crate::sigma::{inv_sigma_exp_regular, SigmaKernel};
use crate::special::{
    capital_phi, classical_phi, euler_const_1, euler_const_2, gen_bernoulli, omega_fn, tau,
};

type Table = EigenTable<f64>;
type Param = KoshParam<f64>;

/// Tolerance for identities whose sides are series only.
pub const TOL_SERIES: f64 = 1e-8;
/// Tolerance for identities with one layer of quadrature.
pub const TOL_QUADRATURE: f64 = 1e-6;
/// Tolerance for identities with a `Ξ_p` integral.
pub const TOL_SPECTRAL: f64 = 1e-5;
/// Largest horizon for the `Ξ`-integrals.
pub const SPECTRAL_MAX_T: f64 = 60.0;

/// Registry ids, in suite order.
pub const IDENTITY_IDS: [&str; 12] = [
    "ramanujan-odd",
    "lerch-gen",
    "dedekind",
    "e2",
    "glaisher-apostol",
    "page220",
    "page220-combination",
    "kosh-theta",
    "kosh-hardy",
    "functional-eq",
    "mellin-334",
    "eta-trivial-values",
];

/// A parameter value recorded in a report.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Real(f64),
    Int(i64),
    Complex(Complex64),
    P(Param),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Real(x) => write!(f, "{x}"),
            ParamValue::Int(n) => write!(f, "{n}"),
            ParamValue::Complex(z) => write!(f, "{}{:+}i", z.re, z.im),
            ParamValue::P(KoshParam::Finite(p)) => write!(f, "{p}"),
            ParamValue::P(KoshParam::Zero) => f.write_str("0"),
            ParamValue::P(KoshParam::Infinity) => f.write_str("inf"),
        }
    }
}

/// One evaluated side. Sides with the same `group` are compared with each other.
#[derive(Debug, Clone, PartialEq)]
pub struct Side {
    pub label: String,
    pub value: Complex64,
    pub group: usize,
}

/// A strict inequality `lhs < rhs` that must hold for the report to pass.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Truncation and quadrature metadata.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Diagnostics {
    /// Total series terms summed.
    pub terms: usize,
    /// Total quadrature nodes.
    pub nodes: usize,
    /// Largest spectral horizon used.
    pub horizon: Option<f64>,
    /// Named auxiliary quantities.
    pub extra: Vec<(String, f64)>,
}

/// Result of one verification.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub identity_id: String,
    pub params: Vec<(String, ParamValue)>,
    pub sides: Vec<Side>,
    pub constraints: Vec<Constraint>,
    pub max_abs_dev: f64,
    pub max_rel_dev: f64,
    pub tol: f64,
    pub pass: bool,
    pub diag: Diagnostics,
}

struct Report {
    id: &'static str,
    params: Vec<(String, ParamValue)>,
    sides: Vec<Side>,
    constraints: Vec<Constraint>,
    diag: Diagnostics,
    tol: f64,
}

impl Report {
    fn new(id: &'static str, tol: f64) -> Self {
        Report {
            id,
            params: Vec::new(),
            sides: Vec::new(),
            constraints: Vec::new(),
            diag: Diagnostics::default(),
            tol,
        }
    }

    fn param(mut self, name: &str, value: ParamValue) -> Self {
        self.params.push((name.to_string(), value));
        self
    }

    fn side(&mut self, group: usize, label: &str, value: f64) {
        self.side_c(group, label, Complex64::new(value, 0.0));
    }

    fn side_c(&mut self, group: usize, label: &str, value: Complex64) {
        self.sides.push(Side {
            label: label.to_string(),
            value,
            group,
        });
    }

    fn quad<V>(&mut self, q: &QuadResult<f64, V>) {
        self.diag.nodes += q.nodes_used;
    }

    fn spectral(&mut self, q: &QuadResult<f64>) {
        self.diag.nodes += q.nodes_used;
        let t = self.diag.horizon.unwrap_or(0.0).max(q.truncation);
        self.diag.horizon = Some(t);
    }

    fn extra(&mut self, name: &str, value: f64) {
        self.diag.extra.push((name.to_string(), value));
    }

    fn finish(self) -> VerifyReport {
        let mut max_abs: f64 = 0.0;
        let mut max_rel: f64 = 0.0;
        let mut pass = true;
        let groups: Vec<usize> = {
            let mut g: Vec<usize> = self.sides.iter().map(|s| s.group).collect();
            g.dedup();
            g
        };
        for g in groups {
            let members: Vec<&Side> = self.sides.iter().filter(|s| s.group == g).collect();
            let reference = members[0].value;
            let mut abs: f64 = 0.0;
            for s in &members[1..] {
                abs = abs.max((s.value - reference).norm());
            }
            let rel = if abs == 0.0 {
                0.0
            } else {
                abs / reference.norm()
            };
            let rel = if rel.is_nan() { f64::INFINITY } else { rel };
            pass &= abs <= self.tol || rel <= self.tol;
            max_abs = max_abs.max(abs);
            max_rel = max_rel.max(rel);
        }
        pass &= self.constraints.iter().all(|c| c.holds);
        pass &= self.sides.iter().all(|s| s.value.re.is_finite() && s.value.im.is_finite());
        VerifyReport {
            identity_id: self.id.to_string(),
            params: self.params,
            sides: self.sides,
            constraints: self.constraints,
            max_abs_dev: max_abs,
            max_rel_dev: max_rel,
            tol: self.tol,
            pass,
            diag: self.diag,
        }
    }
}

fn eps_for(tol: f64) -> f64 {
    (tol * 1e-3).clamp(1e-13, 1e-8)
}

fn check_positive(x: f64, what: &str) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(KoshError::Domain(format!("{what} must be positive, got {x}")))
    }
}

fn real(z: Complex64) -> f64 {
    z.re
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

// ---------------------------------------------------------------------------
// Spectral integrals

/// `|Γ((−1+it)/4)|²`.
pub fn gamma_quarter_sq(t: f64) -> f64 {
    (2.0 * ln_gamma_c(Complex64::new(-0.25, 0.25 * t)).re).exp()
}

/// Horizon for a `Ξ`-integral whose integrand decays like `e^{−rate·t}` times a
/// polynomial: solves `e^{−rate·T} < eps/10` with a margin, capped at
/// [`SPECTRAL_MAX_T`].
pub fn spectral_horizon(rate: f64, eps: f64) -> f64 {
    (((10.0 / eps).ln() + 12.0) / rate).min(SPECTRAL_MAX_T)
}

fn spectral(f: impl Fn(f64) -> f64, rate: f64, eps: f64) -> Result<QuadResult<f64>> {
    let t_max = spectral_horizon(rate, eps);
    let spec = QuadSpec::with_tol(eps)
        .horizon(Horizon::Fixed(t_max))
        .splits([5.0, 10.0, 20.0]);
    integrate_from(f, 0.0, &spec)
}

/// `Ξ_p(t)` with the limits through the Riemann `Ξ`:
/// `Ξ_∞ = Ξ`, `Ξ_0(t) = (√2 cos(t log 2) − 1)Ξ(t)`.
fn big_xi_any(table: &Table, t: f64, eps: f64) -> Result<f64> {
    match table.param() {
        KoshParam::Infinity => Ok(classical_big_xi(t)),
        KoshParam::Zero => Ok((SQRT_2 * (t * LN_2).cos() - 1.0) * classical_big_xi(t)),
        KoshParam::Finite(_) => big_xi_p(table, t, eps),
    }
}

/// `F_p(n) = ∫_0^∞ |Γ((−1+it)/4)|² Ξ_p(t/2) Ξ(t/2) cos(nt)/(1+t²) dt`.
pub fn f_p_spectral(p: Param, n: f64, eps: f64) -> Result<QuadResult<f64>> {
    let table = EigenTable::new(p)?;
    f_p_spectral_with(&table, n, eps)
}

fn f_p_spectral_with(table: &Table, n: f64, eps: f64) -> Result<QuadResult<f64>> {
    let failure = RefCell::new(None);
    let q = spectral(
        |t| {
            let xp = big_xi_any(table, 0.5 * t, eps * 1e-2).unwrap_or_else(|e| {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            });
            gamma_quarter_sq(t) * xp * classical_big_xi(0.5 * t) * (n * t).cos() / (1.0 + t * t)
        },
        1.4,
        eps,
    );
    match failure.into_inner() {
        Some(e) => Err(e),
        None => q,
    }
}

/// `F_p(n)` from the real-variable integral
/// `(π^{3/2}/2) ∫_0^∞ [σ_p(xeⁿ) + K(xeⁿ/2π) − (1+B₀)/(xeⁿ)]·[1/(e^{xe^{−n}}−1) − eⁿ/x] dx`.
pub fn f_p_real(p: Param, n: f64, eps: f64) -> Result<QuadResult<f64>> {
    let table = EigenTable::new(p)?;
    f_p_real_with(&table, n, eps)
}

fn f_p_real_with(table: &Table, n: f64, eps: f64) -> Result<QuadResult<f64>> {
    let p = table.param();
    let kernel = SigmaKernel::new(table, eps * 1e-3)?;
    let (up, down) = (n.exp(), (-n).exp());
    let integrand = |x: f64| {
        let y = x * up;
        // σ_p(y) − 1/y and K(y/2π) − B₀/y, both bounded at the origin
        let first = kernel.regular_real(y)
            + inv_sigma_exp_regular(p, y / std::f64::consts::TAU).unwrap_or(f64::NAN);
        first * (classical::bose_regular(x * down) - 0.5)
    };
    let spec = QuadSpec::with_tol(eps).splits([0.5 * down, down, 4.0 * down, up]);
    let q = integrate_from(integrand, 0.0, &spec)?;
    Ok(QuadResult {
        value: 0.5 * PI.powf(1.5) * q.value,
        ..q
    })
}

/// `G(α) = ∫_0^∞ [1/(t√α(e^{2πt/α}−1)) − √α/(2πt²) + e^{−t/α}/(2t√α)] dt`,
/// which vanishes identically.
pub fn g_alpha(alpha: f64, eps: f64) -> Result<f64> {
    check_positive(alpha, "α")?;
    let integrand = |t: f64| {
        let y = std::f64::consts::TAU * t / alpha;
        classical::bose_regular(y) / t + 0.5 * (-t / alpha).exp_m1() / t
    };
    let spec = QuadSpec::with_tol(eps).splits([alpha]);
    Ok(integrate_from(integrand, 0.0, &spec)?.value / alpha.sqrt())
}

// ---------------------------------------------------------------------------
// Classical digamma-type sums

/// `Σ_{n≥1} f(nα)` where `f(x) ~ Σ_k c_k x^{−2k}` (coefficients from `x^{−2}`).
fn asymptotic_sum(f: impl Fn(f64) -> Result<f64>, alpha: f64, coeffs: &[f64]) -> Result<f64> {
    const HEAD: usize = 64;
    let mut head = 0.0;
    for n in (1..HEAD).rev() {
        head += f(n as f64 * alpha)?;
    }
    let mut tail = 0.0;
    for (k, &ck) in coeffs.iter().enumerate() {
        let s = 2.0 * (k + 1) as f64;
        tail += ck * hurwitz_tail(c(s), HEAD).re / alpha.powf(s);
    }
    Ok(head + tail)
}

const PHI_ASYMP: [f64; 4] = [-1.0 / 12.0, 1.0 / 120.0, -1.0 / 252.0, 1.0 / 240.0];
const TAU_ASYMP: [f64; 4] = [-5.0 / 24.0, 113.0 / 960.0, -1985.0 / 8064.0, 32513.0 / 30720.0];
const OMEGA_ASYMP: [f64; 4] = [-3.0 / 8.0, 43.0 / 320.0, -683.0 / 2688.0, 10923.0 / 10240.0];

/// `Σ_{n≥1} φ(nα)` with `φ(x) = ψ(x) + 1/(2x) − log x`.
pub fn classical_phi_sum(alpha: f64) -> Result<f64> {
    asymptotic_sum(classical_phi, alpha, &PHI_ASYMP)
}

/// `Σ_{n≥1} τ(nα)`.
pub fn tau_sum(alpha: f64) -> Result<f64> {
    asymptotic_sum(tau, alpha, &TAU_ASYMP)
}

/// `Σ_{n≥1} Ω(nα)`.
pub fn omega_sum(alpha: f64) -> Result<f64> {
    asymptotic_sum(omega_fn, alpha, &OMEGA_ASYMP)
}

// ---------------------------------------------------------------------------
// Lambert-series identities

fn param_value(p: Param) -> ParamValue {
    ParamValue::P(p)
}

/// Ramanujan-type formula for `ζ_p(2m+1)` with `αβ = π²`.
pub fn verify_ramanujan_odd(p: Param, m: i32, alpha: f64, tol: f64) -> Result<VerifyReport> {
    if m == 0 {
        return Err(KoshError::InvalidParameter(
            "m = 0 has poles on both sides; use the dedekind identity".into(),
        ));
    }
    check_positive(alpha, "α")?;
    let eps = eps_for(tol);
    let table = EigenTable::new(p)?;
    let beta = PI * PI / alpha;
    let mut r = Report::new("ramanujan-odd", tol)
        .param("p", param_value(p))
        .param("m", ParamValue::Int(m as i64))
        .param("alpha", ParamValue::Real(alpha))
        .param("beta", ParamValue::Real(beta));
    let z = real(zeta_p(&table, c(2.0 * m as f64 + 1.0), eps)?.value);
    let la = lambert_sum(&table, m, alpha, eps * 1e-3)?;
    let lb = lambert_sum(&table, m, beta, eps * 1e-3)?;
    r.diag.terms += la.terms_used + lb.terms_used;
    let lhs = alpha.powi(-m) * (0.5 * z + la.value);
    let beta_side = (-beta).powi(-m) * (0.5 * z + lb.value);
    let mut poly = 0.0;
    if m >= -1 {
        let top = (m + 1) as usize;
        let bern = (0..=top)
            .map(|k| gen_bernoulli(&table, k, eps))
            .collect::<Result<Vec<_>>>()?;
        for j in 0..=top {
            let k = top - j;
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            poly += sign * bern[j] * bern[k] / (factorial(2 * j) * factorial(2 * k))
                * alpha.powi(k as i32)
                * beta.powi(j as i32);
        }
        poly *= 4f64.powi(m);
    }
    // the same α-side with ζ_p(2m+1) from the contour continuation
    let z_contour = match p {
        KoshParam::Finite(_) => real(zeta_p_contour(&table, c(2.0 * m as f64 + 1.0), eps)?.value),
        _ => z,
    };
    r.side(0, "alpha-side", lhs);
    r.side(0, "beta-side + polynomial", beta_side - poly);
    r.side(0, "alpha-side (contour zeta)", alpha.powi(-m) * (0.5 * z_contour + la.value));
    r.extra("beta-side", beta_side);
    r.extra("polynomial", poly);
    r.extra("zeta_p(2m+1)", z);
    Ok(r.finish())
}

/// `ζ_p(4m+3) + 2Σ w_j λ_j^{−4m−3}/(σ(λ_j)e^{2πλ_j}−1)` against the Bernoulli
/// product sum; for `p → 0` also against the closed forms of `ζ(3)` and `ζ(7)`.
pub fn verify_lerch_gen(p: Param, m: u32, tol: f64) -> Result<VerifyReport> {
    let eps = eps_for(tol);
    let table = EigenTable::new(p)?;
    let mut r = Report::new("lerch-gen", tol)
        .param("p", param_value(p))
        .param("m", ParamValue::Int(m as i64));
    let order = 4 * m as i32 + 3;
    let z = real(zeta_p(&table, c(order as f64), eps)?.value);
    let l = lambert_sum(&table, 2 * m as i32 + 1, PI, eps * 1e-3)?;
    r.diag.terms += l.terms_used;
    let lhs = z + 2.0 * l.value;
    let top = 2 * m as usize + 2;
    let bern = (0..=top)
        .map(|k| gen_bernoulli(&table, k, eps))
        .collect::<Result<Vec<_>>>()?;
    let mut sum = 0.0;
    for j in 0..=top {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * bern[j] * bern[top - j] / (factorial(2 * j) * factorial(2 * (top - j)));
    }
    let rhs = -(2f64.powi(order - 1)) * PI.powi(order) * sum;
    r.side(0, "zeta + lambert", lhs);
    r.side(0, "bernoulli sum", rhs);
    if let KoshParam::Zero = p {
        // ζ_0(s) = (2^s − 1)ζ(s)
        let scale = 2f64.powi(order) - 1.0;
        let closed = match m {
            0 => Some(PI.powi(3) / 28.0),
            1 => Some(7.0 * PI.powi(7) / 22860.0),
            _ => None,
        };
        if let Some(v) = closed {
            r.side(0, "closed form", scale * v);
        }
    }
    Ok(r.finish())
}

/// Generalized Dedekind-eta transformation (`m = 0`), `αβ = π²`.
pub fn verify_dedekind(p: Param, alpha: f64, tol: f64) -> Result<VerifyReport> {
    check_positive(alpha, "α")?;
    let eps = eps_for(tol);
    let table = EigenTable::new(p)?;
    let beta = PI * PI / alpha;
    let mut r = Report::new("dedekind", tol)
        .param("p", param_value(p))
        .param("alpha", ParamValue::Real(alpha))
        .param("beta", ParamValue::Real(beta));
    let la = lambert_sum(&table, 0, alpha, eps * 1e-3)?;
    let lb = lambert_sum(&table, 0, beta, eps * 1e-3)?;
    r.diag.terms += la.terms_used + lb.terms_used;
    // (1 + 3u(1+u))/(1+u)³ with u = 1/(πp) equals 1 − (1 − B₀)³
    let coeff = (1.0 - (1.0 - p.b0()).powi(3)) / 12.0;
    r.side(0, "lambert difference", la.value - lb.value);
    r.side(0, "closed form", coeff * (beta - alpha) + 0.25 * (alpha / beta).ln());
    Ok(r.finish())
}

/// Generalized `E₂` transformation, `αβ = π²`; at `α = π` also the
/// self-dual evaluation and the classical limits.
pub fn verify_e2(p: Param, alpha: f64, tol: f64) -> Result<VerifyReport> {
    check_positive(alpha, "α")?;
    let eps = eps_for(tol);
    let table = EigenTable::new(p)?;
    let beta = PI * PI / alpha;
    let mut r = Report::new("e2", tol)
        .param("p", param_value(p))
        .param("alpha", ParamValue::Real(alpha))
        .param("beta", ParamValue::Real(beta));
    let b0 = p.b0();
    let zm1 = real(zeta_p(&table, c(-1.0), eps)?.value);
    let la = lambert_sum_positive(&table, 0, alpha, eps * 1e-3)?;
    let lb = lambert_sum_positive(&table, 0, beta, eps * 1e-3)?;
    r.diag.terms += la.terms_used + lb.terms_used;
    r.side(0, "alpha-side", alpha * (0.5 * zm1 + la.value));
    r.side(0, "beta-side", -beta * (0.5 * zm1 + lb.value) - 0.25 * b0 * b0);
    if (alpha - PI).abs() < 1e-12 {
        r.side(1, "lambert at pi", la.value);
        r.side(1, "-zeta_p(-1)/2 - B0^2/(8 pi)", -0.5 * zm1 - b0 * b0 / (8.0 * PI));
        match p {
            KoshParam::Infinity => r.side(1, "1/24 - 1/(8 pi)", 1.0 / 24.0 - 1.0 / (8.0 * PI)),
            // −Σ(j−½)/(e^{(2j−1)π}+1) = −(1/2)·(1/24)
            KoshParam::Zero => r.side(1, "-1/48", -1.0 / 48.0),
            KoshParam::Finite(_) => {}
        }
    }
    Ok(r.finish())
}

/// `Σ w_j λ_j^{2m+1}/(σ(λ_j)e^{2πλ_j}−1) = −ζ_p(−2m−1)/2` for even `m`
/// (with the extra `−B₀²/(8π)` when `m = 0`).
pub fn verify_glaisher_apostol(p: Param, m: u32, tol: f64) -> Result<VerifyReport> {
    if !m.is_multiple_of(2) {
        return Err(KoshError::InvalidParameter(format!("m must be even, got {m}")));
    }
    let eps = eps_for(tol);
    let table = EigenTable::new(p)?;
    let mut r = Report::new("glaisher-apostol", tol)
        .param("p", param_value(p))
        .param("m", ParamValue::Int(m as i64));
    let l = lambert_sum_positive(&table, m, PI, eps * 1e-3)?;
    r.diag.terms += l.terms_used;
    let order = -(2.0 * m as f64) - 1.0;
    let z = real(zeta_p(&table, c(order), eps)?.value);
    let b0 = p.b0();
    let correction = if m == 0 { -b0 * b0 / (8.0 * PI) } else { 0.0 };
    r.side(0, "lambert", l.value);
    r.side(0, "-zeta_p(-2m-1)/2", -0.5 * z + correction);
    let b = classical::bernoulli_even::<f64>(m as usize + 1)?;
    let denom = 4.0 * m as f64 + 4.0;
    match p {
        KoshParam::Infinity if m > 0 => r.side(0, "B_{2m+2}/(4m+4)", b / denom),
        KoshParam::Zero if m > 0 => {
            // Σ(2j−1)^{2m+1}/(e^{π(2j−1)}+1) = (2^{2m+1}−1)B_{2m+2}/(4m+4)
            let apostol = (2f64.powi(2 * m as i32 + 1) - 1.0) * b / denom;
            r.side(0, "apostol", -apostol / 2f64.powi(2 * m as i32 + 1));
        }
        _ => {}
    }
    Ok(r.finish())
}

// ---------------------------------------------------------------------------
// Page-220 family

/// `√α((C⁽¹⁾ + C⁽²⁾ − (1+B₀)log(2πα))/(2α) + Σ Φ_p(nα))` with the fused sum.
fn page220_side(table: &Table, consts: f64, alpha: f64, eps: f64) -> Result<f64> {
    let b0 = table.b0();
    let sum = phi_sum(table, alpha, eps)?;
    Ok(alpha.sqrt()
        * ((consts - (1.0 + b0) * (std::f64::consts::TAU * alpha).ln()) / (2.0 * alpha) + sum))
}

/// Sum of the two generalized Euler constants entering the page-220 family.
///
/// The family holds with `C⁽²⁾` replaced by `∫_0^∞ [K(x/2π) − B₀e^{−x}/x] dx`,
/// which is the defining limit plus `B₀ log B₀`.
pub fn page220_constant(table: &Table, eps: f64) -> Result<f64> {
    let b0 = table.b0();
    let shift = if b0 > 0.0 { b0 * b0.ln() } else { 0.0 };
    Ok(euler_const_1(table, eps)? + euler_const_2(table, eps)? + shift)
}

/// Three-way check of the page-220 family at `α`, `β = 1/α`, and the
/// `Ξ_p Ξ` integral (real-variable form; the `Ξ` form as a fourth side when
/// `with_spectral`).
pub fn verify_page220(p: Param, alpha: f64, tol: f64, with_spectral: bool) -> Result<VerifyReport> {
    check_positive(alpha, "α")?;
    let eps = eps_for(tol);
    let table = EigenTable::new(p)?;
    let beta = 1.0 / alpha;
    let mut r = Report::new("page220", tol)
        .param("p", param_value(p))
        .param("alpha", ParamValue::Real(alpha))
        .param("beta", ParamValue::Real(beta));
    let n = 0.5 * alpha.ln();
    let scale = -2.0 / PI.powf(1.5);
    match p {
        KoshParam::Zero => {
            let side = |a: f64| -> Result<f64> {
                Ok(a.sqrt() * ((EULER_GAMMA - (PI * a).ln()) / (2.0 * a) + tau_sum(a)?))
            };
            r.side(0, "alpha-side (tau)", side(alpha)?);
            r.side(0, "beta-side (tau)", side(beta)?);
        }
        KoshParam::Infinity => {
            let side = |a: f64| -> Result<f64> {
                let g = EULER_GAMMA;
                Ok(a.sqrt()
                    * ((2.0 * g - 2.0 * (std::f64::consts::TAU * a).ln()) / (2.0 * a)
                        + 2.0 * classical_phi_sum(a)?))
            };
            r.side(0, "alpha-side (phi)", side(alpha)?);
            r.side(0, "beta-side (phi)", side(beta)?);
        }
        KoshParam::Finite(_) => {
            let consts = page220_constant(&table, eps)?;
            r.extra("C1 + C2 + B0 log B0", consts);
            r.side(0, "alpha-side", page220_side(&table, consts, alpha, eps)?);
            r.side(0, "beta-side", page220_side(&table, consts, beta, eps)?);
        }
    }
    let fr = f_p_real_with(&table, n, eps)?;
    r.quad(&fr);
    r.side(0, "-2 pi^(-3/2) F_p real", scale * fr.value);
    if with_spectral {
        let fs = f_p_spectral_with(&table, n, eps)?;
        r.spectral(&fs);
        r.side(0, "-2 pi^(-3/2) F_p spectral", scale * fs.value);
    }
    Ok(r.finish())
}

/// `−(c/π^{3/2}) ∫ |Γ((−1+it)/4)|² Ξ²(t/2) cos(½t log α) w(t)/(1+t²) dt`.
fn xi_squared_integral(
    alpha: f64,
    weight: impl Fn(f64) -> f64,
    eps: f64,
) -> Result<QuadResult<f64>> {
    let la = alpha.ln();
    spectral(
        |t| {
            let x = classical_big_xi(0.5 * t);
            gamma_quarter_sq(t) * x * x * (0.5 * t * la).cos() * weight(t) / (1.0 + t * t)
        },
        1.4,
        eps,
    )
}

/// The second route to the `p → 0` page-220 relation: the combination
/// `ℋ(α)` of classical relations, the `Ω` identity, and the two digamma-series
/// inequalities at `α = 2`.
pub fn verify_p220_combination(alpha: f64, tol: f64) -> Result<VerifyReport> {
    check_positive(alpha, "α")?;
    let eps = eps_for(tol);
    let beta = 1.0 / alpha;
    let g = EULER_GAMMA;
    let mut r = Report::new("page220-combination", tol).param("alpha", ParamValue::Real(alpha));

    // (a) ℋ(α) from its definition, from the τ-sum, and as a Ξ² integral
    let h_def = {
        let sa = alpha.sqrt();
        (1.0 / SQRT_2)
            * ((2.0 * alpha).sqrt() * (g - (4.0 * PI * alpha).ln()) / (4.0 * alpha)
                + (alpha / 2.0).sqrt() * (g - (PI * alpha).ln()) / alpha)
            - sa * (g - (std::f64::consts::TAU * alpha).ln()) / (2.0 * alpha)
            + (1.0 / SQRT_2)
                * ((2.0 * alpha).sqrt() * classical_phi_sum(2.0 * alpha)?
                    + (alpha / 2.0).sqrt() * classical_phi_sum(alpha / 2.0)?)
            - sa * classical_phi_sum(alpha)?
    };
    let h_tau =
        0.5 * alpha.sqrt() * ((g - (PI * alpha).ln()) / (2.0 * alpha) + tau_sum(alpha)?);
    let h_spec = xi_squared_integral(alpha, |t| SQRT_2 * (0.5 * t * LN_2).cos() - 1.0, eps)?;
    r.spectral(&h_spec);
    r.side(0, "H definition", h_def);
    r.side(0, "H tau-sum", h_tau);
    r.side(0, "H spectral", -h_spec.value / PI.powf(1.5));

    // (b) Ω identity
    let omega_side = |a: f64| -> Result<f64> {
        Ok(a.sqrt() * ((3.0 * g - 2.0 * LN_2 - 3.0 * (PI * a).ln()) / (2.0 * a) + omega_sum(a)?))
    };
    let o_spec = xi_squared_integral(alpha, |t| (0.5 * t * LN_2).cos(), eps)?;
    r.spectral(&o_spec);
    r.side(1, "Omega alpha-side", omega_side(alpha)?);
    r.side(1, "Omega beta-side", omega_side(beta)?);
    r.side(1, "Omega spectral", -2.0 * SQRT_2 / PI.powf(1.5) * o_spec.value);

    // (c) the inequalities read off at α = 2
    let s1 = omega_sum(2.0)?;
    let s2 = omega_sum(0.5)?;
    let b1 = ((32.0 * PI.powi(3)).ln() - 3.0 * g) / 4.0;
    let b2 = (PI.powi(3) / 2.0).ln() - 3.0 * g;
    r.constraints.push(Constraint {
        label: "sum {2psi(4n)+psi(n)+3/(4n)-log(16n^3)} < (log(32pi^3)-3gamma)/4".into(),
        lhs: s1,
        rhs: b1,
        holds: s1 < b1,
    });
    r.constraints.push(Constraint {
        label: "sum {2psi(n)+psi(n/4)+3/n-log(n^3/4)} < log(pi^3/2)-3gamma".into(),
        lhs: s2,
        rhs: b2,
        holds: s2 < b2,
    });
    Ok(r.finish())
}

// ---------------------------------------------------------------------------
// Koshliakov's Gaussian-weighted relations

fn check_ab(a: f64) -> Result<f64> {
    check_positive(a, "a")?;
    Ok(PI / a)
}

/// `a^{3/2} ∫_0^∞ x e^{−a²x²} {K(x) + σ_p(2πx) − (1+B₀)/(2πx)} dx`.
fn theta_side(table: &Table, a: f64, eps: f64) -> Result<QuadResult<f64>> {
    let p = table.param();
    let kernel = SigmaKernel::new(table, eps * 1e-3)?;
    let bracket = |x: f64| {
        inv_sigma_exp_regular(p, x).unwrap_or(f64::NAN)
            + kernel.regular_real(std::f64::consts::TAU * x)
    };
    let spec = QuadSpec::with_tol(eps).splits([0.5 / a, 1.0 / a, 3.0 / a]);
    let q = integrate_from(|x: f64| x * (-a * a * x * x).exp() * bracket(x), 0.0, &spec)?;
    Ok(QuadResult {
        value: a.powf(1.5) * q.value,
        ..q
    })
}

/// Koshliakov's theta-type relation with `ab = π`.
pub fn verify_kosh_theta(p: Param, a: f64, tol: f64) -> Result<VerifyReport> {
    let b = check_ab(a)?;
    let eps = eps_for(tol);
    let table = EigenTable::new(p)?;
    let mut r = Report::new("kosh-theta", tol)
        .param("p", param_value(p))
        .param("a", ParamValue::Real(a))
        .param("b", ParamValue::Real(b));
    let qa = theta_side(&table, a, eps)?;
    let qb = theta_side(&table, b, eps)?;
    r.quad(&qa);
    r.quad(&qb);
    let shift = (PI.sqrt() / a).ln();
    let failure = RefCell::new(None);
    let qs = spectral(
        |t| {
            let x = big_xi_any(&table, 0.5 * t, eps * 1e-2).unwrap_or_else(|e| {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            });
            x * gamma_quarter_sq(t) * (0.5 * t * shift).cos()
        },
        1.0,
        eps,
    )?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    r.spectral(&qs);
    r.side(0, "a-side", qa.value);
    r.side(0, "b-side", qb.value);
    r.side(0, "spectral", -0.125 * PI.powf(-1.75) * qs.value);
    Ok(r.finish())
}

/// `√a ∫_0^∞ e^{−a²x²} {Φ_p(x) + (1+B₀)/(2x)} dx`; for `p → 0` the bracket is
/// `τ(x) + 1/(2x)`, for `p → ∞` it is `2φ(x) + 1/x`.
fn hardy_side(table: &Table, a: f64, eps: f64) -> Result<QuadResult<f64>> {
    let b0 = table.b0();
    let failure = RefCell::new(None);
    let bracket = |x: f64| -> Result<f64> {
        match table.param() {
            KoshParam::Zero => Ok(tau(x)? + 0.5 / x),
            KoshParam::Infinity => Ok(2.0 * classical_phi(x)? + 1.0 / x),
            KoshParam::Finite(_) => Ok(capital_phi(table, x, eps * 1e-2)? + 0.5 * (1.0 + b0) / x),
        }
    };
    let spec = QuadSpec::with_tol(eps).splits([0.5 / a, 1.0 / a, 3.0 / a]);
    let q = integrate_from(
        |x: f64| {
            let v = bracket(x).unwrap_or_else(|e| {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            });
            (-a * a * x * x).exp() * v
        },
        0.0,
        &spec,
    );
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let q = q?;
    Ok(QuadResult {
        value: a.sqrt() * q.value,
        ..q
    })
}

/// Koshliakov's Hardy-type relation with `ab = π`.
///
/// The bracket `ψ_{1,p} + ψ_{2,p} + c + 2/x − (1+B₀)log x` must equal
/// `Φ_p(x) + (1+B₀)/(2x)` for the relation to hold, which fixes
/// `c = −B₀ log B₀` with the definition-consistent `ψ_{2,p}`.
pub fn verify_kosh_hardy(p: Param, a: f64, tol: f64) -> Result<VerifyReport> {
    let b = check_ab(a)?;
    let eps = eps_for(tol);
    let table = EigenTable::new(p)?;
    let mut r = Report::new("kosh-hardy", tol)
        .param("p", param_value(p))
        .param("a", ParamValue::Real(a))
        .param("b", ParamValue::Real(b));
    let qa = hardy_side(&table, a, eps)?;
    let qb = hardy_side(&table, b, eps)?;
    r.quad(&qa);
    r.quad(&qb);
    let shift = (PI.sqrt() / a).ln();
    let failure = RefCell::new(None);
    let qs = spectral(
        |t| {
            let x = big_xi_any(&table, 0.5 * t, eps * 1e-2).unwrap_or_else(|e| {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            });
            x / (t * t + 1.0) * (0.5 * t * shift).cos() / (0.5 * PI * t).cosh()
        },
        1.6,
        eps,
    )?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    r.spectral(&qs);
    r.side(0, "a-side", qa.value);
    r.side(0, "b-side", qb.value);
    r.side(0, "spectral", 4.0 * PI.powf(0.25) * qs.value);
    Ok(r.finish())
}

// ---------------------------------------------------------------------------
// Function-level identities

/// `ζ_p(1−s) = 2cos(πs/2) Γ(s) (2π)^{−s} η_p(s)`, the left side by contour
/// continuation and the right side from the `η_p` series.
pub fn verify_functional_eq(p: Param, s: Complex64, tol: f64) -> Result<VerifyReport> {
    let eps = eps_for(tol);
    let table = EigenTable::new(p)?;
    let mut r = Report::new("functional-eq", tol)
        .param("p", param_value(p))
        .param("s", ParamValue::Complex(s));
    let w = c(1.0) - s;
    let lhs = match p {
        KoshParam::Finite(_) => {
            let z = zeta_p_contour(&table, w, eps)?;
            r.diag.nodes += z.trunc_terms;
            z.value
        }
        _ => zeta_p(&table, w, eps)?.value,
    };
    let e = eta_p(&table, s, eps)?;
    r.diag.terms += e.trunc_terms;
    let factor = 2.0 * (s * (PI / 2.0)).cos() * gamma_c(s)? * (-s * std::f64::consts::TAU.ln()).exp();
    r.side_c(0, "zeta_p(1-s)", lhs);
    r.side_c(0, "2cos(pi s/2)Gamma(s)(2pi)^(-s)eta_p(s)", factor * e.value);
    Ok(r.finish())
}

/// `∫_0^∞ x^{s−1} σ_p(x) dx = Γ(s) ζ_p(s)` for `Re s > 1`.
pub fn verify_mellin_334(p: Param, s: Complex64, tol: f64) -> Result<VerifyReport> {
    if s.re <= 1.0 {
        return Err(KoshError::Domain(format!("the Mellin form needs Re s > 1, got {s}")));
    }
    let eps = eps_for(tol);
    let table = EigenTable::new(p)?;
    let mut r = Report::new("mellin-334", tol)
        .param("p", param_value(p))
        .param("s", ParamValue::Complex(s));
    let kernel = SigmaKernel::new(&table, eps * 1e-3)?;
    let spec = QuadSpec::with_tol(eps).splits([1.0, 4.0]);
    let q = integrate_from(
        |x: f64| {
            let v = kernel.sigma_p_real(x).unwrap_or(f64::NAN);
            (s - 1.0).scale_power(x) * v
        },
        0.0,
        &spec,
    )?;
    r.quad(&q);
    let z = zeta_p(&table, s, eps)?;
    r.diag.terms += z.trunc_terms;
    r.side_c(0, "mellin integral", q.value);
    r.side_c(0, "Gamma(s) zeta_p(s)", gamma_c(s)? * z.value);
    Ok(r.finish())
}

trait ScalePower {
    fn scale_power(self, x: f64) -> Complex64;
}

impl ScalePower for Complex64 {
    /// `x^self` for real `x > 0`.
    fn scale_power(self, x: f64) -> Complex64 {
        (self * x.ln()).exp()
    }
}

/// `η_p(−(2k−1)) = −B_{2k}^{(p)}/(2k)` together with the trivial zeros
/// `ζ_p(−2k) = η_p(−2k) = 0`.
pub fn verify_eta_trivial_values(p: Param, k: usize, tol: f64) -> Result<VerifyReport> {
    if k == 0 {
        return Err(KoshError::InvalidParameter("k starts at 1".into()));
    }
    let eps = eps_for(tol);
    let table = EigenTable::new(p)?;
    let mut r = Report::new("eta-trivial-values", tol)
        .param("p", param_value(p))
        .param("k", ParamValue::Int(k as i64));
    let kf = k as f64;
    let eta_odd = real(eta_p(&table, c(1.0 - 2.0 * kf), eps)?.value);
    let b = gen_bernoulli(&table, k, eps)?;
    r.side(0, "eta_p(1-2k)", eta_odd);
    r.side(0, "-B_2k/(2k)", -b / (2.0 * kf));
    r.side(1, "zeta_p(-2k)", real(zeta_p(&table, c(-2.0 * kf), eps)?.value));
    r.side(1, "0", 0.0);
    r.side(2, "eta_p(-2k)", real(eta_p(&table, c(-2.0 * kf), eps)?.value));
    r.side(2, "0", 0.0);
    Ok(r.finish())
}

// ---------------------------------------------------------------------------
// Registry

/// Parameters accepted by [`verify`]; each identity reads the ones it needs.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyParams {
    pub p: Param,
    pub m: i32,
    pub alpha: f64,
    pub a: f64,
    pub s: Complex64,
    pub k: usize,
    /// `None` selects the identity's default tolerance.
    pub tol: Option<f64>,
    /// Adds the `Ξ` side to `page220`.
    pub spectral: bool,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            p: KoshParam::Finite(1.0),
            m: 1,
            alpha: PI,
            a: 1.0,
            s: c(2.5),
            k: 1,
            tol: None,
            spectral: false,
        }
    }
}

/// Default tolerance of a registered identity.
pub fn default_tol(id: &str) -> Result<f64> {
    Ok(match id {
        "ramanujan-odd" | "lerch-gen" | "dedekind" | "e2" | "glaisher-apostol"
        | "eta-trivial-values" => TOL_SERIES,
        "page220" | "functional-eq" | "mellin-334" => TOL_QUADRATURE,
        "page220-combination" | "kosh-theta" | "kosh-hardy" => TOL_SPECTRAL,
        _ => return Err(KoshError::UnknownId(id.to_string())),
    })
}

fn unsigned(m: i32, what: &str) -> Result<u32> {
    u32::try_from(m).map_err(|_| KoshError::InvalidParameter(format!("{what} needs m ≥ 0")))
}

/// Runs the identity registered under `id`.
pub fn verify(id: &str, params: &VerifyParams) -> Result<VerifyReport> {
    let tol = match params.tol {
        Some(t) => t,
        None => default_tol(id)?,
    };
    let p = params.p;
    match id {
        "ramanujan-odd" => verify_ramanujan_odd(p, params.m, params.alpha, tol),
        "lerch-gen" => verify_lerch_gen(p, unsigned(params.m, id)?, tol),
        "dedekind" => verify_dedekind(p, params.alpha, tol),
        "e2" => verify_e2(p, params.alpha, tol),
        "glaisher-apostol" => verify_glaisher_apostol(p, unsigned(params.m, id)?, tol),
        "page220" => verify_page220(p, params.alpha, tol, params.spectral),
        "page220-combination" => verify_p220_combination(params.alpha, tol),
        "kosh-theta" => verify_kosh_theta(p, params.a, tol),
        "kosh-hardy" => verify_kosh_hardy(p, params.a, tol),
        "functional-eq" => verify_functional_eq(p, params.s, tol),
        "mellin-334" => verify_mellin_334(p, params.s, tol),
        "eta-trivial-values" => verify_eta_trivial_values(p, params.k, tol),
        _ => Err(KoshError::UnknownId(id.to_string())),
    }
}

/// One suite entry.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteCase {
    pub id: &'static str,
    pub params: VerifyParams,
}

/// The standard suite, in registry order.
pub fn suite_cases() -> Vec<SuiteCase> {
    let one = KoshParam::Finite(1.0);
    let case = |id, f: &dyn Fn(&mut VerifyParams)| {
        let mut params = VerifyParams::default();
        f(&mut params);
        SuiteCase { id, params }
    };
    vec![
        case("ramanujan-odd", &|v| {
            v.p = KoshParam::Infinity;
            v.m = 1;
        }),
        case("ramanujan-odd", &|v| {
            v.p = KoshParam::Zero;
            v.alpha = PI / 2.0;
        }),
        case("ramanujan-odd", &|v| {
            v.p = one;
            v.m = 2;
            v.alpha = 1.3;
        }),
        case("ramanujan-odd", &|v| {
            v.p = one;
            v.m = -2;
            v.alpha = 1.3;
        }),
        case("lerch-gen", &|v| {
            v.p = KoshParam::Zero;
            v.m = 0;
        }),
        case("lerch-gen", &|v| {
            v.p = KoshParam::Zero;
            v.m = 1;
        }),
        case("lerch-gen", &|v| {
            v.p = KoshParam::Infinity;
            v.m = 0;
        }),
        case("lerch-gen", &|v| v.m = 0),
        case("dedekind", &|v| v.p = KoshParam::Infinity),
        case("dedekind", &|v| {
            v.p = KoshParam::Zero;
            v.alpha = 2.0;
        }),
        case("dedekind", &|v| v.alpha = 1.5),
        case("e2", &|v| v.p = KoshParam::Infinity),
        case("e2", &|v| v.p = KoshParam::Zero),
        case("e2", &|v| v.alpha = 2.0),
        case("e2", &|_| {}),
        case("glaisher-apostol", &|v| {
            v.p = KoshParam::Infinity;
            v.m = 2;
        }),
        case("glaisher-apostol", &|v| {
            v.p = KoshParam::Zero;
            v.m = 2;
        }),
        case("glaisher-apostol", &|v| v.m = 2),
        case("glaisher-apostol", &|v| v.m = 0),
        case("page220", &|v| {
            v.p = KoshParam::Infinity;
            v.alpha = 1.0;
        }),
        case("page220", &|v| {
            v.p = KoshParam::Zero;
            v.alpha = 2.0;
        }),
        case("page220", &|v| v.alpha = 1.5),
        case("page220-combination", &|v| v.alpha = 2.0),
        case("kosh-theta", &|v| v.a = PI.sqrt()),
        case("kosh-theta", &|v| {
            v.p = KoshParam::Zero;
            v.a = PI.sqrt();
        }),
        case("kosh-theta", &|_| {}),
        case("kosh-hardy", &|v| {
            v.p = KoshParam::Zero;
            v.a = PI.sqrt();
        }),
        case("kosh-hardy", &|_| {}),
        case("functional-eq", &|v| v.s = Complex64::new(3.0, 1.0)),
        case("mellin-334", &|v| v.s = c(2.5)),
        case("eta-trivial-values", &|v| v.k = 2),
    ]
}
