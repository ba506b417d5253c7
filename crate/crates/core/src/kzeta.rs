//! `ζ_p`, `η_p`, `ω_p`, `ξ_p`, `Ξ_p` and the classical Riemann comparators.
//!
//! Method selection for finite `p`:
//!
//! | function | region                         | method                               |
//! |----------|--------------------------------|--------------------------------------|
//! | `ζ_p`    | `Re s > 1`                     | direct sum + Euler–Maclaurin tail    |
//! | `ζ_p`    | `0 ≤ Re s ≤ 1`, `|Im s| ≤ 4`   | contour integral                     |
//! | `ζ_p`    | `0 ≤ Re s ≤ 1`, `|Im s| > 4`   | Euler–Maclaurin continuation         |
//! | `ζ_p`    | `Re s < 0`                     | functional equation with `η_p(1−s)`  |
//! | `η_p`    | `Re s > 1`                     | `(s,νk)_k` series + asymptotic tail  |
//! | `η_p`    | `0 < Re s ≤ 1`, `|Im s| ≤ 4`   | Mellin integral of `K`               |
//! | `η_p`    | otherwise                      | functional equation with `ζ_p(1−s)`  |
//!
//! The contour representation cancels catastrophically once `|Im s|` is large
//! (the two ray integrals grow like `e^{π|Im s|/2}` while their sum does not),
//! which is why the Euler–Maclaurin form takes over there. Left of the strip the
//! Euler–Maclaurin head grows like `N^{1−Re s}` and cancels, so the functional
//! equation is used instead.

use num_complex::Complex;

use crate::classical::{self, expm1_c, hurwitz_tail, ln_gamma_c, rgamma_c};
use crate::em;
use crate::error::{KoshError, Result};
use crate::jet;
use crate::quadrature::{integrate_from, integrate_vertical_line, Horizon, QuadSpec};
use crate::roots::{EigenTable, KoshParam};
use crate::sigma::{inv_sigma_exp, inv_sigma_exp_c, inv_sigma_exp_regular};
use crate::Real;

/// Largest `|Im s|` handled by the contour and Mellin integrals.
pub const OSCILLATION_SWITCH: f64 = 4.0;

/// Radius of the circle used to evaluate `ξ_p` next to `s = 1`.
const XI_CIRCLE_RADIUS: f64 = 0.05;
const XI_CIRCLE_POINTS: usize = 16;
const XI_CIRCLE_TRIGGER: f64 = 1e-3;

const MAX_ETA_TERMS: usize = 400;

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZetaMethod {
    Series,
    Continuation,
    FunctionalEq,
    ClosedForm,
    EulerMaclaurin,
    Mellin,
}

impl ZetaMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            ZetaMethod::Series => "series",
            ZetaMethod::Continuation => "continuation",
            ZetaMethod::FunctionalEq => "functional_eq",
            ZetaMethod::ClosedForm => "closed_form",
            ZetaMethod::EulerMaclaurin => "euler_maclaurin",
            ZetaMethod::Mellin => "mellin",
        }
    }
}

/// A zeta-family value with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaEval<T> {
    pub value: Complex<T>,
    pub method: ZetaMethod,
    /// Terms summed or quadrature nodes used.
    pub trunc_terms: usize,
    pub err_estimate: T,
}

impl<T: Real> ZetaEval<T> {
    fn closed(value: Complex<T>) -> Self {
        ZetaEval {
            value,
            method: ZetaMethod::ClosedForm,
            trunc_terms: 0,
            err_estimate: T::epsilon() * value.norm(),
        }
    }

    fn scaled(self, factor: Complex<T>, method: ZetaMethod) -> Self {
        ZetaEval {
            value: self.value * factor,
            method,
            trunc_terms: self.trunc_terms,
            err_estimate: self.err_estimate * factor.norm(),
        }
    }
}

fn cr<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

fn check_eps<T: Real>(eps: T) -> Result<T> {
    if !(eps > T::zero()) {
        return Err(KoshError::InvalidParameter(format!("eps must be positive, got {eps}")));
    }
    Ok(eps.max(T::epsilon() * T::lit(16.0)))
}

fn pole_check<T: Real>(s: Complex<T>, what: &str) -> Result<()> {
    if s == cr(T::one()) {
        return Err(KoshError::Pole(format!("{what} at s = 1")));
    }
    Ok(())
}

/// `2^s − 1` without cancellation near `s = 0`.
fn two_pow_minus_one<T: Real>(s: Complex<T>) -> Complex<T> {
    expm1_c(s * T::LN_2())
}

/// `ζ_p(s)`.
pub fn zeta_p<T: Real>(table: &EigenTable<T>, s: Complex<T>, eps: T) -> Result<ZetaEval<T>> {
    let eps = check_eps(eps)?;
    pole_check(s, "ζ_p")?;
    match table.param() {
        KoshParam::Infinity => return Ok(ZetaEval::closed(classical::zeta(s)?)),
        KoshParam::Zero => {
            return Ok(ZetaEval::closed(two_pow_minus_one(s) * classical::zeta(s)?));
        }
        KoshParam::Finite(_) => {}
    }
    if s == cr(T::zero()) {
        return Ok(ZetaEval::closed(cr(-table.b0() * T::lit(0.5))));
    }
    let wide = s.im.abs() > T::lit(OSCILLATION_SWITCH);
    if s.re > T::one() {
        let mut r = zeta_p_em(table, s)?;
        r.method = ZetaMethod::Series;
        Ok(r)
    } else if s.re >= T::zero() {
        if wide {
            zeta_p_em(table, s)
        } else {
            zeta_p_contour(table, s, eps)
        }
    } else {
        zeta_p_functional(table, s, eps)
    }
}

/// `ζ_p(s)` from `Σ_{j<N} w_j λ_j^{−s}` plus the Euler–Maclaurin remainder.
/// Valid for every `s ≠ 1` with `|s| ≲ 98`; `N ≥ |s| + 30`.
pub fn zeta_p_em<T: Real>(table: &EigenTable<T>, s: Complex<T>) -> Result<ZetaEval<T>> {
    pole_check(s, "ζ_p")?;
    let need = (s.norm().as_f64() + 30.0).ceil() as usize;
    let anchor = table.anchor_at_least(need).ok_or_else(|| {
        KoshError::Domain(format!("|s| = {} too large for the Euler–Maclaurin path", s.norm()))
    })?;
    let n = anchor.n;
    let mut head = cr(T::zero());
    for j in (1..n).rev() {
        let (l, w) = table.pair(j);
        head += (-s * l.ln()).exp() * w;
    }
    let lam_n = anchor.lam[0];
    let ln_lam = jet::ln(&anchor.lam, lam_n.ln());
    let arg: Vec<Complex<T>> = ln_lam.iter().map(|&c| -s * c).collect();
    let power = (-s * lam_n.ln()).exp();
    let f = jet::exp(&arg, power);
    let one = cr(T::one());
    let integral = power * lam_n / (s - one);
    let (tail, err) = em::tail(anchor, &f, integral, cr, |c: Complex<T>| c.norm());
    let value = head + tail;
    Ok(ZetaEval {
        value,
        method: ZetaMethod::EulerMaclaurin,
        trunc_terms: n,
        err_estimate: err + T::epsilon() * T::from_index(n) * value.norm(),
    })
}

/// Contour continuation of `ζ_p`:
///
/// ```text
/// ζ_p(s) = α^{1−s}/(s−1) − i∫_0^∞ (α−iy)^{−s} K(y+iα) dy + i∫_0^∞ (α+iy)^{−s} K(y−iα) dy
/// ```
///
/// with `α = λ₁/2`, valid for every `s ≠ 1`.
pub fn zeta_p_contour<T: Real>(
    table: &EigenTable<T>,
    s: Complex<T>,
    eps: T,
) -> Result<ZetaEval<T>> {
    let eps = check_eps(eps)?;
    pole_check(s, "ζ_p")?;
    let p = table.param();
    let alpha = table.lambda(1) * T::lit(0.5);
    let i = Complex::new(T::zero(), T::one());
    let horizon = eps.recip().ln() / T::TAU() + T::lit(5.0);
    let spec = QuadSpec::with_tol(eps * T::lit(0.1)).horizon(Horizon::Fixed(horizon));
    let g = |y: T| {
        let lower = Complex::new(alpha, -y);
        let upper = Complex::new(alpha, y);
        let k_lo = inv_sigma_exp_c(p, Complex::new(y, alpha));
        let k_hi = inv_sigma_exp_c(p, Complex::new(y, -alpha));
        -i * (-s * lower.ln()).exp() * k_lo + i * (-s * upper.ln()).exp() * k_hi
    };
    let q = integrate_vertical_line(g, &spec)?;
    let one = cr(T::one());
    let lead = ((one - s) * alpha.ln()).exp() / (s - one);
    Ok(ZetaEval {
        value: lead + q.value,
        method: ZetaMethod::Continuation,
        trunc_terms: q.nodes_used,
        err_estimate: q.abs_err,
    })
}

/// `ζ_p(s) = 2cos(π(1−s)/2) Γ(1−s) (2π)^{s−1} η_p(1−s)`, intended for `Re s < 0`.
pub fn zeta_p_functional<T: Real>(
    table: &EigenTable<T>,
    s: Complex<T>,
    eps: T,
) -> Result<ZetaEval<T>> {
    let one = cr(T::one());
    let w = one - s;
    let eta = eta_p(table, w, eps)?;
    let factor = (w * T::FRAC_PI_2()).cos()
        * T::lit(2.0)
        * (ln_gamma_c(w) - w * T::TAU().ln()).exp();
    Ok(eta.scaled(factor, ZetaMethod::FunctionalEq))
}

/// Koshliakov's kernel
/// `(s,νk)_k = Γ(s)^{−1} ∫_0^∞ e^{−x} ((kν−x)/(kν+x))^k x^{s−1} dx`.
///
/// With `x = kν·e^{∓v}` both halves of the split at `x = kν` become one
/// integral over `v ∈ [0, ∞)` carrying the common factor `tanh(v/2)^k`.
pub fn kernel_snu<T: Real>(s: Complex<T>, nu: T, k: usize, eps: T) -> Result<Complex<T>> {
    if k == 0 {
        return Err(KoshError::InvalidParameter("kernel index k starts at 1".into()));
    }
    let sign = if k.is_multiple_of(2) { T::one() } else { -T::one() };
    if nu == T::zero() {
        return Ok(cr(sign));
    }
    if nu.is_infinite() {
        return Ok(cr(T::one()));
    }
    if !(nu > T::zero()) {
        return Err(KoshError::InvalidParameter(format!("ν must be non-negative, got {nu}")));
    }
    if !(s.re > T::zero()) {
        return Err(KoshError::Domain(format!("(s,νk)_k integral needs Re s > 0, got {s}")));
    }
    let eps = check_eps(eps)?;
    let kf = T::from_index(k);
    let ln_scale = (kf * nu).ln();
    let lnk = ln_scale;
    let integrand = |v: T| {
        let e = (-v).exp();
        let ln_tanh = (-e).ln_1p() - e.ln_1p();
        let common = kf * ln_tanh;
        let x_lo = (lnk - v).exp();
        let x_hi = (lnk + v).exp();
        let lo = (s * (lnk - v) + (common - x_lo)).exp();
        let hi = if x_hi.is_finite() {
            (s * (lnk + v) + (common - x_hi)).exp() * sign
        } else {
            cr(T::zero())
        };
        lo + hi
    };
    let spec = QuadSpec::with_tol(eps * T::lit(0.1));
    let q = integrate_from(integrand, T::zero(), &spec)?;
    Ok(q.value * rgamma_c(s))
}

/// `η_p(s)`.
pub fn eta_p<T: Real>(table: &EigenTable<T>, s: Complex<T>, eps: T) -> Result<ZetaEval<T>> {
    let eps = check_eps(eps)?;
    let one = cr(T::one());
    match table.param() {
        KoshParam::Infinity => {
            pole_check(s, "η_p")?;
            return Ok(ZetaEval::closed(classical::zeta(s)?));
        }
        KoshParam::Zero => {
            // (2^{1−s} − 1)ζ(s) = [expm1((1−s)ln2)/(s−1)]·[(s−1)ζ(s)], finite at s = 1.
            let d = s - one;
            let ratio = if d.norm() == T::zero() {
                cr(-T::LN_2())
            } else {
                expm1_c(-d * T::LN_2()) / d
            };
            return Ok(ZetaEval::closed(ratio * classical::zeta_times_s_minus_1(s)));
        }
        KoshParam::Finite(_) => {}
    }
    pole_check(s, "η_p")?;
    if s == cr(T::zero()) {
        return Ok(ZetaEval::closed(cr(-T::lit(0.5))));
    }
    let wide = s.im.abs() > T::lit(OSCILLATION_SWITCH);
    if s.re > T::one() {
        match eta_p_series(table, s, eps) {
            Err(KoshError::SeriesNonConvergence(_)) => eta_p_mellin(table, s, eps),
            other => other,
        }
    } else if s.re > T::zero() && !wide {
        eta_p_mellin(table, s, eps)
    } else {
        eta_p_functional(table, s, eps)
    }
}

/// `η_p(s) = Σ_k (s,2πpk)_k k^{−s}` (`Re s > 1`).
///
/// Terms up to `K` are summed exactly. Expanding `((1−u)/(1+u))^k` with
/// `u = x/(kν)` shows `(s,νk)_k = q^s(1 + c₂k^{−2} + c₄k^{−4} + O(k^{−6}))` with
/// `q = ν/(ν+2)`, so the remainder is a combination of Hurwitz tails.
pub fn eta_p_series<T: Real>(
    table: &EigenTable<T>,
    s: Complex<T>,
    eps: T,
) -> Result<ZetaEval<T>> {
    let eps = check_eps(eps)?;
    let pv = table.param().value().ok_or_else(|| {
        KoshError::InvalidParameter("the η_p series needs finite p".into())
    })?;
    if !(s.re > T::one()) {
        return Err(KoshError::Domain(format!("η_p series needs Re s > 1, got {s}")));
    }
    let nu = T::TAU() * pv;
    let need = (T::lit(8.0) * (s.norm() + T::lit(3.0)) / nu).ceil().as_f64();
    if need > MAX_ETA_TERMS as f64 {
        return Err(KoshError::SeriesNonConvergence(format!(
            "η_p series at ν = {nu} needs about {need} terms"
        )));
    }
    let terms = (need as usize).max(32);
    let mut sum = cr(T::zero());
    for k in (1..=terms).rev() {
        let kern = kernel_snu(s, nu, k, eps)?;
        sum += kern * (-s * T::from_index(k).ln()).exp();
    }
    let q = nu / (nu + T::lit(2.0));
    let r = q / nu;
    let poch = |n: usize| (0..n).fold(cr(T::one()), |acc, i| acc * (s + T::from_index(i)));
    let c2 = poch(3) * (-T::lit(2.0 / 3.0) * r.powi(3));
    let c4 = poch(5) * (-T::lit(2.0 / 5.0) * r.powi(5)) + poch(6) * (T::lit(2.0 / 9.0) * r.powi(6));
    let start = terms + 1;
    let two = cr(T::lit(2.0));
    let four = cr(T::lit(4.0));
    let tail = (s * q.ln()).exp()
        * (hurwitz_tail(s, start) + c2 * hurwitz_tail(s + two, start) + c4 * hurwitz_tail(s + four, start));
    // First omitted order: ~ c₆ K^{−s−5}; bound it by the size of the c₄ term over K².
    let kf = T::from_index(start);
    let err = (c4 * hurwitz_tail(s + four, start)).norm() / (kf * kf) + eps * sum.norm();
    Ok(ZetaEval {
        value: sum + tail,
        method: ZetaMethod::Series,
        trunc_terms: terms,
        err_estimate: err,
    })
}

/// Mellin form for `Re s > 0`:
///
/// ```text
/// (2π)^{−s} Γ(s) η_p(s) = ∫_0^1 t^{s−1}(K(t) − B₀/(2πt)) dt + B₀/(2π(s−1)) + ∫_1^∞ t^{s−1} K(t) dt
/// ```
///
/// `K(t) − B₀/(2πt) → −½` at the origin for every `p`; that constant is
/// integrated exactly so the remaining integrand vanishes at `t = 0` even
/// when `Re s` is small.
pub fn eta_p_mellin<T: Real>(
    table: &EigenTable<T>,
    s: Complex<T>,
    eps: T,
) -> Result<ZetaEval<T>> {
    let eps = check_eps(eps)?;
    pole_check(s, "η_p")?;
    if !(s.re > T::zero()) {
        return Err(KoshError::Domain(format!("Mellin form of η_p needs Re s > 0, got {s}")));
    }
    let p = table.param();
    let b0 = p.b0();
    let spec = QuadSpec::with_tol(eps * T::lit(0.1));
    // t = e^{−v} on (0, 1]: t^{s−1} dt → e^{−sv} dv.
    let inner = integrate_from(
        |v: T| {
            let t = (-v).exp();
            if t == T::zero() {
                return cr(T::zero());
            }
            let reg = inv_sigma_exp_regular(p, t).unwrap_or(T::nan()) + T::lit(0.5);
            (-s * v).exp() * reg
        },
        T::zero(),
        &spec,
    )?;
    let outer = integrate_from(
        |t: T| {
            let k = inv_sigma_exp(p, t).unwrap_or(T::nan());
            if k == T::zero() {
                return cr(T::zero());
            }
            (s - T::one()) .scale_ln(t) * k
        },
        T::one(),
        &spec,
    )?;
    let one = cr(T::one());
    let pole = cr(b0 / T::TAU()) / (s - one);
    let constant = -cr(T::lit(0.5)) / s;
    let mellin = inner.value + constant + outer.value + pole;
    let factor = (s * T::TAU().ln() - ln_gamma_c(s)).exp();
    let value = mellin * factor;
    Ok(ZetaEval {
        value,
        method: ZetaMethod::Mellin,
        trunc_terms: inner.nodes_used + outer.nodes_used,
        err_estimate: (inner.abs_err + outer.abs_err) * factor.norm(),
    })
}

trait ScaleLn<T> {
    /// `t^self` for real `t > 0`.
    fn scale_ln(self, t: T) -> Complex<T>;
}

impl<T: Real> ScaleLn<T> for Complex<T> {
    fn scale_ln(self, t: T) -> Complex<T> {
        (self * t.ln()).exp()
    }
}

/// `η_p(s) = (2π)^s sin(πs/2) Γ(1−s) ζ_p(1−s)/π`, finite at negative odd integers.
pub fn eta_p_functional<T: Real>(
    table: &EigenTable<T>,
    s: Complex<T>,
    eps: T,
) -> Result<ZetaEval<T>> {
    let one = cr(T::one());
    let w = one - s;
    let zeta = zeta_p(table, w, eps)?;
    let factor = (s * T::FRAC_PI_2()).sin()
        * (s * T::TAU().ln() + ln_gamma_c(w)).exp()
        * T::FRAC_1_PI();
    Ok(zeta.scaled(factor, ZetaMethod::FunctionalEq))
}

/// `ω_p(s) = (ζ_p(s) + η_p(s))/2`.
pub fn omega_p<T: Real>(table: &EigenTable<T>, s: Complex<T>, eps: T) -> Result<Complex<T>> {
    let z = zeta_p(table, s, eps)?;
    let e = eta_p(table, s, eps)?;
    Ok((z.value + e.value) * T::lit(0.5))
}

fn xi_p_direct<T: Real>(table: &EigenTable<T>, s: Complex<T>, eps: T) -> Result<Complex<T>> {
    let one = cr(T::one());
    let half = T::lit(0.5);
    let pref = (ln_gamma_c(s * half + one) - s * (half * T::PI().ln())).exp();
    Ok(pref * (s - one) * omega_p(table, s, eps)?)
}

/// `ξ_p(s) = (s−1) π^{−s/2} Γ(1+s/2) ω_p(s)`, entire.
///
/// Within `10⁻³` of `s = 1` the value is the mean of `ξ_p` over a small circle
/// around `s`, which is exact for entire functions and avoids the pole of `ω_p`.
pub fn xi_p<T: Real>(table: &EigenTable<T>, s: Complex<T>, eps: T) -> Result<Complex<T>> {
    let one = cr(T::one());
    if (s - one).norm() >= T::lit(XI_CIRCLE_TRIGGER) {
        return xi_p_direct(table, s, eps);
    }
    let r = T::lit(XI_CIRCLE_RADIUS);
    let mut sum = cr(T::zero());
    for k in 0..XI_CIRCLE_POINTS {
        let theta = T::TAU() * T::from_index(k) / T::from_index(XI_CIRCLE_POINTS);
        let point = s + Complex::from_polar(r, theta);
        sum += xi_p_direct(table, point, eps)?;
    }
    Ok(sum / T::from_index(XI_CIRCLE_POINTS))
}

/// `Ξ_p(t) = ξ_p(1/2 + it)`, real for real `t`.
pub fn big_xi_p<T: Real>(table: &EigenTable<T>, t: T, eps: T) -> Result<T> {
    xi_p(table, Complex::new(T::lit(0.5), t), eps).map(|v| v.re)
}

/// Riemann `ζ(s)` (accelerated alternating series, functional equation for `Re s < 0`).
pub fn classical_zeta<T: Real>(s: Complex<T>) -> Result<Complex<T>> {
    classical::zeta(s)
}

/// Riemann `ξ(s)`.
pub fn classical_xi<T: Real>(s: Complex<T>) -> Complex<T> {
    classical::xi(s)
}

/// Riemann `Ξ(t)`.
pub fn classical_big_xi<T: Real>(t: T) -> T {
    classical::big_xi(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn zeta2_closed(p: f64) -> f64 {
        let a = 1.0 / (PI * p);
        PI * PI / 6.0 * (1.0 + 3.0 * a * (1.0 + a)) / ((1.0 + a) * (1.0 + a))
    }

    #[test]
    fn series_matches_closed_form_at_two() {
        for &p in &[0.25, 1.0, 4.0] {
            let t = EigenTable::new(KoshParam::Finite(p)).unwrap();
            let z = zeta_p(&t, c(2.0, 0.0), 1e-14).unwrap();
            assert!((z.value.re - zeta2_closed(p)).abs() < 1e-12, "p={p}: {}", z.value);
            assert_eq!(z.method, ZetaMethod::Series);
        }
    }

    #[test]
    fn contour_matches_series_on_the_right() {
        let t = EigenTable::new(KoshParam::Finite(1.0)).unwrap();
        for s in [c(2.0, 0.0), c(2.0, 3.0)] {
            let a = zeta_p_contour(&t, s, 1e-13).unwrap().value;
            let b = zeta_p_em(&t, s).unwrap().value;
            assert!((a - b).norm() < 1e-10, "s={s}: {a} vs {b}");
        }
    }

    #[test]
    fn eta_paths_agree() {
        let t = EigenTable::new(KoshParam::Finite(1.0)).unwrap();
        let s = c(2.5, 0.0);
        let a = eta_p_series(&t, s, 1e-13).unwrap().value;
        let b = eta_p_mellin(&t, s, 1e-13).unwrap().value;
        assert!((a - b).norm() < 1e-10, "{a} vs {b}");
        assert!((a.re - 0.641_669_907_318_930_67).abs() < 1e-10);
    }

    #[test]
    fn kernel_limits() {
        assert_eq!(kernel_snu(c(2.0, 0.0), 0.0, 3, 1e-12).unwrap().re, -1.0);
        assert_eq!(kernel_snu(c(2.0, 0.0), f64::INFINITY, 3, 1e-12).unwrap().re, 1.0);
        let big = kernel_snu(c(2.0, 0.0), 1e7, 2, 1e-12).unwrap();
        assert!((big.re - 1.0).abs() < 1e-6);
    }

    #[test]
    fn xi_is_continuous_through_one() {
        let t = EigenTable::new(KoshParam::Finite(1.0)).unwrap();
        let at = xi_p(&t, c(1.0, 0.0), 1e-12).unwrap();
        let near = xi_p(&t, c(1.002, 0.0), 1e-12).unwrap();
        assert!((at - near).norm() < 1e-3);
        assert!(at.im.abs() < 1e-12);
    }
}
