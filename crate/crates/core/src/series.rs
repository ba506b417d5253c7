//! Lambert-type sums over the eigenvalues and the sums `Σ_n Φ_p(nα)`.

use num_complex::Complex;

use crate::classical::{bose_regular, hurwitz_tail};
use crate::error::{KoshError, Result};
use crate::kzeta::zeta_p;
use crate::quadrature::{integrate_from, QuadSpec};
use crate::roots::{EigenTable, KoshParam};
use crate::sigma::{inv_sigma_exp, SigmaKernel};
use crate::special::capital_phi;
use crate::Real;

/// A truncated sum `Σ_j w_j λ_j^{e} K(λ_j α/π)` with its tail bound.
#[derive(Debug, Clone, PartialEq)]
pub struct LambertSum<T: Real> {
    pub p: KoshParam<T>,
    /// Power `e` of `λ_j` (`−2m−1` or `2m+1`).
    pub exponent: i32,
    /// The `α` in `e^{2αλ_j}`.
    pub scale: T,
    pub value: T,
    pub terms_used: usize,
    /// Bound on the neglected terms.
    pub tail_bound: T,
}

fn check_alpha<T: Real>(alpha: T) -> Result<()> {
    if alpha > T::zero() && alpha.is_finite() {
        Ok(())
    } else {
        Err(KoshError::Domain(format!("α must be positive, got {alpha}")))
    }
}

/// `Σ_j w_j λ_j^{exponent} / (σ(λ_j α/π) e^{2αλ_j} − 1)` for any integer exponent.
///
/// Uses `|K(t)| ≤ 1/(e^{2πt} − 1)` and `λ_{j+1} − λ_j ≥ ½` to bound the tail
/// geometrically; summation stops once that bound drops below `eps`.
pub fn lambert_general<T: Real>(
    table: &EigenTable<T>,
    exponent: i32,
    alpha: T,
    eps: T,
) -> Result<LambertSum<T>> {
    check_alpha(alpha)?;
    let p = table.param();
    let mut terms = Vec::new();
    let mut j = 1;
    let tail_bound = loop {
        let (lam, w) = table.pair(j);
        let k = inv_sigma_exp(p, lam * alpha / T::PI())?;
        terms.push(w * lam.powi(exponent) * k);
        // majorant of term j+1 and the ratio of consecutive majorants
        let next = lam + T::lit(0.5);
        let bound = next.powi(exponent.max(0)) * lam.powi(exponent.min(0))
            / (T::lit(2.0) * alpha * next).exp_m1();
        let ratio = (-alpha).exp() * ((next + T::lit(0.5)) / next).powi(exponent.max(0));
        if ratio < T::one() {
            let tail = bound / (T::one() - ratio);
            if tail < eps {
                break tail;
            }
        }
        j += 1;
        if j > 1_000_000 {
            return Err(KoshError::SeriesNonConvergence(format!(
                "Lambert sum with α = {alpha} did not reach {eps}"
            )));
        }
    };
    let value = terms.iter().rev().fold(T::zero(), |acc, &t| acc + t);
    Ok(LambertSum {
        p,
        exponent,
        scale: alpha,
        value,
        terms_used: terms.len(),
        tail_bound,
    })
}

/// `Σ_j w_j λ_j^{−2m−1} / (σ(λ_j α/π) e^{2αλ_j} − 1)`.
pub fn lambert_sum<T: Real>(
    table: &EigenTable<T>,
    m: i32,
    alpha: T,
    eps: T,
) -> Result<LambertSum<T>> {
    lambert_general(table, -2 * m - 1, alpha, eps)
}

/// `Σ_j w_j λ_j^{2m+1} / (σ(λ_j α/π) e^{2αλ_j} − 1)`.
pub fn lambert_sum_positive<T: Real>(
    table: &EigenTable<T>,
    m: u32,
    alpha: T,
    eps: T,
) -> Result<LambertSum<T>> {
    lambert_general(table, 2 * m as i32 + 1, alpha, eps)
}

/// `Σ_{n≥1} Φ_p(nα)` by one quadrature:
/// `−(2π/α) ∫_0^∞ [K(t) + σ_p(2πt)]·(1/(e^{2πt/α} − 1) − α/(2πt) + ½) dt`.
pub fn phi_sum<T: Real>(table: &EigenTable<T>, alpha: T, eps: T) -> Result<T> {
    check_alpha(alpha)?;
    let p = table.param();
    let kernel = SigmaKernel::new(table, eps * T::lit(1e-3))?;
    let integrand = |t: T| {
        let y = T::TAU() * t / alpha;
        let k = inv_sigma_exp(p, t).unwrap_or(T::nan());
        let s = kernel.sigma_p_real(T::TAU() * t).unwrap_or(T::nan());
        (k + s) * bose_regular(y)
    };
    let spec = QuadSpec::with_tol(eps * T::lit(0.1)).splits([T::lit(0.25), alpha.min(T::lit(4.0))]);
    let q = integrate_from(integrand, T::zero(), &spec)?;
    Ok(-T::TAU() / alpha * q.value)
}

/// Coefficients `a₂, a₄` of `Φ_p(x) ~ a₂/x² + a₄/x⁴` for large `x`:
/// `a₂ = −2(∫tK + ∫tσ_p(2πt))`, `a₄ = 2(∫t³K + ∫t³σ_p(2πt))`.
pub fn capital_phi_asymptotics<T: Real>(table: &EigenTable<T>, eps: T) -> Result<(T, T)> {
    let p = table.param();
    let spec = QuadSpec::with_tol(eps * T::lit(0.1)).splits([T::one()]);
    let moment = |power: i32| -> Result<T> {
        integrate_from(
            |t: T| t.powi(power) * inv_sigma_exp(p, t).unwrap_or(T::nan()),
            T::zero(),
            &spec,
        )
        .map(|q| q.value)
    };
    // ∫ t^{s−1} σ_p(2πt) dt = Γ(s) ζ_p(s) / (2π)^s
    let zeta_moment = |s: usize, fact: T| -> Result<T> {
        let z = zeta_p(table, Complex::new(T::from_index(s), T::zero()), eps)?;
        Ok(fact * z.value.re / T::TAU().powi(s as i32))
    };
    let two = T::lit(2.0);
    let a2 = -two * (moment(1)? + zeta_moment(2, T::one())?);
    let a4 = two * (moment(3)? + zeta_moment(4, T::lit(6.0))?);
    Ok((a2, a4))
}

/// `Σ_{n≥1} Φ_p(nα)` term by term for `n < n_terms`, with the remainder from
/// the two-term large-`x` expansion of `Φ_p`.
pub fn phi_sum_termwise<T: Real>(
    table: &EigenTable<T>,
    alpha: T,
    n_terms: usize,
    eps: T,
) -> Result<T> {
    check_alpha(alpha)?;
    let n_terms = n_terms.max(2);
    let mut head = T::zero();
    for n in (1..n_terms).rev() {
        head += capital_phi(table, T::from_index(n) * alpha, eps)?;
    }
    let (a2, a4) = capital_phi_asymptotics(table, eps)?;
    let h2 = hurwitz_tail(Complex::new(T::lit(2.0), T::zero()), n_terms).re;
    let h4 = hurwitz_tail(Complex::new(T::lit(4.0), T::zero()), n_terms).re;
    Ok(head + a2 * h2 / (alpha * alpha) + a4 * h4 / alpha.powi(4))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_lambert_is_plain_sum() {
        let t = EigenTable::new(KoshParam::<f64>::Infinity).unwrap();
        let s = lambert_sum(&t, 1, std::f64::consts::PI, 1e-15).unwrap();
        let direct: f64 = (1..40)
            .map(|j| {
                let j = j as f64;
                j.powi(-3) / (2.0 * std::f64::consts::PI * j).exp_m1()
            })
            .sum();
        assert!((s.value - direct).abs() < 1e-16);
        assert!(s.terms_used >= 1 && s.tail_bound < 1e-15);
    }

    #[test]
    fn classical_eisenstein_values() {
        let pi = std::f64::consts::PI;
        let inf = EigenTable::new(KoshParam::<f64>::Infinity).unwrap();
        let v = lambert_sum_positive(&inf, 0, pi, 1e-16).unwrap().value;
        assert!((v - (1.0 / 24.0 - 1.0 / (8.0 * pi))).abs() < 1e-15);
        let zero = EigenTable::new(KoshParam::<f64>::Zero).unwrap();
        // −Σ (j−½)/(e^{(2j−1)π}+1) = −(1/2)·(1/24)
        let v = lambert_sum_positive(&zero, 0, pi, 1e-16).unwrap().value;
        assert!((v + 1.0 / 48.0).abs() < 1e-15);
    }

    #[test]
    fn phi_sum_paths_agree() {
        let t = EigenTable::new(KoshParam::Finite(1.0f64)).unwrap();
        let a = phi_sum(&t, 1.0, 1e-12).unwrap();
        let b = phi_sum_termwise(&t, 1.0, 40, 1e-12).unwrap();
        assert!((a - b).abs() < 1e-9, "{a} vs {b}");
    }
}
