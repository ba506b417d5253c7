//! Generalized Euler constants, generalized Bernoulli numbers and the
//! gamma-type functions `ψ_{1,p}`, `ψ_{2,p}`, `φ_{1,p}`, `φ_{2,p}`, `Φ_p`,
//! together with the classical `ψ`, `φ`, `τ` and `Ω`.

use num_complex::Complex;

use crate::classical::{self, digamma, exp_e1, expm1_minus_x, hurwitz_tail, EULER_GAMMA};
use crate::em;
use crate::error::{KoshError, Result};
use crate::jet;
use crate::kzeta::{kernel_snu, zeta_p};
use crate::quadrature::{integrate_from, QuadSpec};
use crate::roots::{EigenTable, KoshParam};
use crate::sigma::{inv_sigma_exp, inv_sigma_exp_regular, SigmaKernel};
use crate::Real;

/// `C_p^{(1)}`, `C_p^{(2)}` and `B_{2k}^{(p)}` for one `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct GenConstants<T: Real> {
    pub p: KoshParam<T>,
    pub c1: T,
    pub c2: T,
    /// `B_0^{(p)}, B_2^{(p)}, …`
    pub bernoulli: Vec<T>,
}

impl<T: Real> GenConstants<T> {
    /// Both constants and `B_{2k}^{(p)}` for `k = 0..=kmax`.
    pub fn compute(table: &EigenTable<T>, kmax: usize, eps: T) -> Result<Self> {
        let bernoulli = (0..=kmax)
            .map(|k| gen_bernoulli(table, k, eps))
            .collect::<Result<Vec<_>>>()?;
        Ok(GenConstants {
            p: table.param(),
            c1: euler_const_1(table, eps)?,
            c2: euler_const_2(table, eps)?,
            bernoulli,
        })
    }
}

fn positive<T: Real>(x: T, what: &str) -> Result<()> {
    if x > T::zero() && x.is_finite() {
        Ok(())
    } else {
        Err(KoshError::Domain(format!("{what} needs x > 0, got {x}")))
    }
}

fn spec_for<T: Real>(eps: T) -> QuadSpec<T> {
    QuadSpec::with_tol(eps * T::lit(0.1))
}

/// `(e^{−t} − 1)/t`, accurate for small `t`.
fn expm1_neg_over<T: Real>(t: T) -> T {
    (expm1_minus_x(-t) - t) / t
}

/// `C_p^{(1)} = ∫_0^∞ (σ_p(t) − e^{−t}/t) dt`.
pub fn euler_const_1<T: Real>(table: &EigenTable<T>, eps: T) -> Result<T> {
    match table.param() {
        KoshParam::Infinity => return Ok(T::lit(EULER_GAMMA)),
        KoshParam::Zero => return Ok(T::lit(EULER_GAMMA) + T::lit(4.0).ln()),
        KoshParam::Finite(_) => {}
    }
    let kernel = SigmaKernel::new(table, eps * T::lit(1e-3))?;
    let integrand = |t: T| {
        if t <= T::one() {
            kernel.regular_real(t) - expm1_neg_over(t)
        } else {
            kernel.sigma_p_real(t).unwrap_or(T::nan()) - (-t).exp() / t
        }
    };
    let spec = spec_for(eps).splits([T::one(), T::lit(4.0)]);
    Ok(integrate_from(integrand, T::zero(), &spec)?.value)
}

/// `C_p^{(1)}` from its defining limit `lim (Σ_{j<n} w_j/λ_j − log λ_n)`,
/// with the tail summed by Euler–Maclaurin.
pub fn euler_const_1_series<T: Real>(table: &EigenTable<T>) -> Result<T> {
    let anchor = table
        .anchor_at_least(1)
        .ok_or_else(|| KoshError::Domain("table has no Euler–Maclaurin anchor".into()))?;
    let n = anchor.n;
    let mut head = T::zero();
    for j in (1..n).rev() {
        let (l, w) = table.pair(j);
        head += w / l;
    }
    let lam_n = anchor.lam[0];
    let f = jet::recip(&anchor.lam);
    // Σ_{j≥N} w_j/λ_j diverges; its Euler–Maclaurin form with the integral
    // ∫_{λ_N}^{λ_M} dλ/λ replaced by −log λ_N is exactly the regularized limit.
    let (tail, _) = em::tail(anchor, &f, -lam_n.ln(), |x| x, |x: T| x.abs());
    Ok(head + tail)
}

/// `C_p^{(2)}`, the limit `lim (Σ_{k<n} (1,2πpk)_k/k − B₀ log n)`, evaluated as
/// `∫_0^∞ [K(x/2π) − B₀ e^{−x}/x] dx − B₀ log B₀`.
///
/// The last term is the Frullani limit of
/// `∫ [q^n(x) e^{−nx}/(1 − q(x)e^{−x}) − B₀ e^{−nx}/x] dx` with
/// `q(x) = (2πp − x)/(2πp + x)`: under `x = y/n` it tends to
/// `B₀ ∫ (e^{−y/B₀} − e^{−y})/y dy = B₀ log B₀`, not zero.
pub fn euler_const_2<T: Real>(table: &EigenTable<T>, eps: T) -> Result<T> {
    let p = table.param();
    match p {
        KoshParam::Infinity => return Ok(T::lit(EULER_GAMMA)),
        KoshParam::Zero => return Ok(-T::LN_2()),
        KoshParam::Finite(_) => {}
    }
    let b0 = p.b0();
    let integrand = |x: T| {
        let t = x / T::TAU();
        if x <= T::one() {
            inv_sigma_exp_regular(p, t).unwrap_or(T::nan()) - b0 * expm1_neg_over(x)
        } else {
            inv_sigma_exp(p, t).unwrap_or(T::nan()) - b0 * (-x).exp() / x
        }
    };
    let spec = spec_for(eps).splits([T::one(), T::lit(8.0)]);
    Ok(integrate_from(integrand, T::zero(), &spec)?.value - b0 * b0.ln())
}

/// `C_p^{(2)}` from its defining limit `lim (Σ_{k<n} (1,2πpk)_k/k − B₀ log n)`.
///
/// The first terms use the exact kernel; beyond them
/// `(1,νk)_k = B₀(1 + c₂k^{−2} + c₄k^{−4} + …)`, which sums in closed form.
pub fn euler_const_2_series<T: Real>(table: &EigenTable<T>, terms: usize, eps: T) -> Result<T> {
    let pv = table.param().value().ok_or_else(|| {
        KoshError::InvalidParameter("the defining series of C_p^{(2)} needs finite p".into())
    })?;
    let nu = T::TAU() * pv;
    let q = table.b0();
    let r = q / nu;
    let one = Complex::new(T::one(), T::zero());
    let mut head = T::zero();
    for k in (1..terms).rev() {
        head += kernel_snu(one, nu, k, eps)?.re / T::from_index(k);
    }
    let c2 = -T::lit(4.0) * r.powi(3);
    let c4 = -T::lit(48.0) * r.powi(5) + T::lit(160.0) * r.powi(6);
    let h3 = hurwitz_tail(Complex::new(T::lit(3.0), T::zero()), terms).re;
    let h5 = hurwitz_tail(Complex::new(T::lit(5.0), T::zero()), terms).re;
    Ok(head - q * digamma(T::from_index(terms))? + q * (c2 * h3 + c4 * h5))
}

/// `B_{2k}^{(p)}`: `B₀^{(p)}` for `k = 0`, otherwise
/// `(−1)^{k+1}·4k·∫_0^∞ x^{2k−1} σ_p(2πx) dx`.
pub fn gen_bernoulli<T: Real>(table: &EigenTable<T>, k: usize, eps: T) -> Result<T> {
    if k == 0 {
        return Ok(table.b0());
    }
    let kernel = SigmaKernel::new(table, eps * T::lit(1e-3))?;
    let power = 2 * k as i32 - 1;
    let integrand = |x: T| {
        let z = T::TAU() * x;
        // x^{2k−1}/(2πx) + x^{2k−1}(σ_p(2πx) − 1/(2πx))
        x.powi(power - 1) / T::TAU() + x.powi(power) * kernel.regular_real(z)
    };
    let spec = spec_for(eps).splits([T::lit(0.5), T::from_index(k)]);
    let integral = integrate_from(
        |x: T| {
            if x < T::lit(0.3) {
                integrand(x)
            } else {
                x.powi(power) * kernel.sigma_p_real(T::TAU() * x).unwrap_or(T::nan())
            }
        },
        T::zero(),
        &spec,
    )?
    .value;
    let sign = if k % 2 == 1 { T::one() } else { -T::one() };
    Ok(sign * T::lit(4.0) * T::from_index(k) * integral)
}

/// `B_{2k}^{(p)} = (−1)^{k+1}·2·(2k)!·ζ_p(2k)/(2π)^{2k}`, the even-value formula.
pub fn gen_bernoulli_from_zeta<T: Real>(table: &EigenTable<T>, k: usize, eps: T) -> Result<T> {
    if k == 0 {
        return Ok(table.b0());
    }
    let z = zeta_p(table, Complex::new(T::from_index(2 * k), T::zero()), eps)?.value.re;
    let fact = (1..=2 * k).fold(T::one(), |acc, i| acc * T::from_index(i));
    let sign = if k % 2 == 1 { T::one() } else { -T::one() };
    Ok(sign * T::lit(2.0) * fact * z / T::TAU().powi(2 * k as i32))
}

/// `Q_μ(s) = ∫_μ^∞ e^{−t} t^{s−1} dt`.
pub fn incomplete_gamma_q<T: Real>(mu: T, s: Complex<T>) -> Result<Complex<T>> {
    classical::incomplete_gamma_upper(mu, s)
}

/// Classical digamma `ψ(x)`.
pub fn classical_psi<T: Real>(x: T) -> Result<T> {
    digamma(x)
}

/// Ramanujan's `φ(x) = ψ(x) + 1/(2x) − log x`.
pub fn classical_phi<T: Real>(x: T) -> Result<T> {
    positive(x, "φ")?;
    Ok(digamma(x)? + T::lit(0.5) / x - x.ln())
}

/// `τ(x) = ½(ψ(1+x/2) − ψ((1+x)/2)) + ψ(x+½) − 1/(2x) − log x`.
pub fn tau<T: Real>(x: T) -> Result<T> {
    positive(x, "τ")?;
    let half = T::lit(0.5);
    Ok(half * (digamma(T::one() + half * x)? - digamma(half * (T::one() + x))?)
        + digamma(x + half)?
        - half / x
        - x.ln())
}

/// `Ω(x) = 2ψ(2x) + ψ(x/2) + 3/(2x) − 3 log x − log 2`.
pub fn omega_fn<T: Real>(x: T) -> Result<T> {
    positive(x, "Ω")?;
    let two = T::lit(2.0);
    Ok(two * digamma(two * x)? + digamma(x / two)? + T::lit(1.5) / x
        - T::lit(3.0) * x.ln()
        - T::LN_2())
}

fn rational_splits<T: Real>(x: T) -> Vec<T> {
    let mut pts = vec![T::one()];
    if x < T::lit(20.0) {
        pts.extend([x * T::lit(0.5), x, x * T::lit(2.0)]);
    }
    pts
}

/// `φ_{1,p}(x) = −2∫_0^∞ t K(t)/(t² + x²) dt` by quadrature, for any `p`.
pub fn phi_1p_integral<T: Real>(p: KoshParam<T>, x: T, eps: T) -> Result<T> {
    positive(x, "φ_{1,p}")?;
    let x2 = x * x;
    let integrand = |t: T| {
        let k = inv_sigma_exp(p, t).unwrap_or(T::nan());
        -T::lit(2.0) * t * k / (t * t + x2)
    };
    let spec = spec_for(eps).splits(rational_splits(x));
    Ok(integrate_from(integrand, T::zero(), &spec)?.value)
}

/// `φ_{1,p}(x)`; the limits use `ψ(x+½) − log x` (`p → 0`) and `φ(x)` (`p → ∞`).
pub fn phi_1p<T: Real>(table: &EigenTable<T>, x: T, eps: T) -> Result<T> {
    positive(x, "φ_{1,p}")?;
    match table.param() {
        KoshParam::Zero => Ok(digamma(x + T::lit(0.5))? - x.ln()),
        KoshParam::Infinity => classical_phi(x),
        p @ KoshParam::Finite(_) => phi_1p_integral(p, x, eps),
    }
}

/// `ψ_{1,p}(x) = φ_{1,p}(x) − (1 − B₀/2)/x + log x`.
pub fn psi_1p<T: Real>(table: &EigenTable<T>, x: T, eps: T) -> Result<T> {
    let b0 = table.b0();
    Ok(phi_1p(table, x, eps)? - (T::one() - T::lit(0.5) * b0) / x + x.ln())
}

/// `ψ_{1,p}(x)` from the product definition
/// `−C_p^{(1)} − 1/x + Σ_j w_j (1/λ_j − 1/(x+λ_j))`, tail by Euler–Maclaurin.
pub fn psi_1p_series<T: Real>(table: &EigenTable<T>, x: T) -> Result<T> {
    positive(x, "ψ_{1,p}")?;
    let anchor = table
        .anchor_at_least(1)
        .ok_or_else(|| KoshError::Domain("table has no Euler–Maclaurin anchor".into()))?;
    let n = anchor.n;
    let mut head = T::zero();
    for j in (1..n).rev() {
        let (l, w) = table.pair(j);
        head += w * x / (l * (l + x));
    }
    let lam_n = anchor.lam[0];
    // F(λ) = 1/λ − 1/(λ + x), ∫_{λ_N}^∞ F = log(1 + x/λ_N)
    let inv = jet::recip(&anchor.lam);
    let mut shifted = anchor.lam.clone();
    shifted[0] += x;
    let f = jet::add(&inv, &jet::scale(&jet::recip(&shifted), -T::one()));
    let (tail, _) = em::tail(anchor, &f, (x / lam_n).ln_1p(), |v| v, |v: T| v.abs());
    Ok(-euler_const_1_series(table)? - T::one() / x + head + tail)
}

/// `φ_{2,p}(x) = −2∫_0^∞ t σ_p(2πt)/(t² + x²) dt` by quadrature, for any `p`.
pub fn phi_2p_integral<T: Real>(table: &EigenTable<T>, x: T, eps: T) -> Result<T> {
    positive(x, "φ_{2,p}")?;
    let kernel = SigmaKernel::new(table, eps * T::lit(1e-3))?;
    let x2 = x * x;
    let integrand = |t: T| {
        let z = T::TAU() * t;
        // t σ_p(2πt) = 1/(2π) + t (σ_p(2πt) − 1/(2πt))
        let ts = if z < T::lit(2.0) {
            T::FRAC_1_PI() * T::lit(0.5) + t * kernel.regular_real(z)
        } else {
            t * kernel.sigma_p_real(z).unwrap_or(T::nan())
        };
        -T::lit(2.0) * ts / (t * t + x2)
    };
    let spec = spec_for(eps).splits(rational_splits(x));
    Ok(integrate_from(integrand, T::zero(), &spec)?.value)
}

/// `φ_{2,p}(x)`; the limits use `−1/(2x) + (ψ(x/2+1) − ψ((x+1)/2))/2`
/// (`p → 0`) and `φ(x)` (`p → ∞`).
pub fn phi_2p<T: Real>(table: &EigenTable<T>, x: T, eps: T) -> Result<T> {
    positive(x, "φ_{2,p}")?;
    let half = T::lit(0.5);
    match table.param() {
        KoshParam::Zero => Ok(-half / x
            + half * (digamma(half * x + T::one())? - digamma(half * (x + T::one()))?)),
        KoshParam::Infinity => classical_phi(x),
        KoshParam::Finite(_) => phi_2p_integral(table, x, eps),
    }
}

/// `ψ_{2,p}(x) − φ_{2,p}(x) + 1/(2x) − B₀ log x`, which equals `B₀ log B₀`.
///
/// Summing `(1,2πp(x+k))_k/(x+k) = ∫_0^∞ e^{−(x+k)u} q(u)^k du` over `k` gives
/// `ψ_{2,p}(x) = −C_p^{(2)} − 1/x + ∫_0^∞ (1 − e^{−xu}) K(u/2π) du`, and with
/// `C_p^{(2)}` taken as its defining limit the constant is `B₀ log B₀`. The often
/// quoted `−2B₀ e^{2πp} Q_{2πp}(0)` differs from it by about `2·10⁻³` at `p = 1`;
/// [`psi_2p_quoted_constant`] returns that value for comparison.
pub fn psi_2p_offset<T: Real>(p: KoshParam<T>) -> T {
    let b0 = p.b0();
    if b0 > T::zero() {
        b0 * b0.ln()
    } else {
        T::zero()
    }
}

/// `2B₀ e^{2πp} Q_{2πp}(0) = 2B₀ e^{μ} E₁(μ)` with `μ = 2πp`; zero in both limits.
pub fn psi_2p_quoted_constant<T: Real>(p: KoshParam<T>) -> Result<T> {
    match p {
        KoshParam::Finite(pv) => Ok(T::lit(2.0) * p.b0() * exp_e1(T::TAU() * pv)?),
        _ => Ok(T::zero()),
    }
}

/// `ψ_{2,p}(x) = φ_{2,p}(x) + B₀ log B₀ − 1/(2x) + B₀ log x`, consistent with the
/// product definition and the defining limit of `C_p^{(2)}` (see [`psi_2p_offset`]).
pub fn psi_2p<T: Real>(table: &EigenTable<T>, x: T, eps: T) -> Result<T> {
    let p = table.param();
    let b0 = p.b0();
    Ok(phi_2p(table, x, eps)? + psi_2p_offset(p) - T::lit(0.5) / x + b0 * x.ln())
}

/// `Φ_p(x) = φ_{1,p}(x) + φ_{2,p}(x)`.
pub fn capital_phi<T: Real>(table: &EigenTable<T>, x: T, eps: T) -> Result<T> {
    Ok(phi_1p(table, x, eps)? + phi_2p(table, x, eps)?)
}

/// `I₁(x) = ∫_0^∞ (σ_p(t) − 1/t + B₀/2) e^{−xt} dt`, the Laplace-type
/// representation of `−φ_{1,p}(x)`.
pub fn i1_laplace<T: Real>(table: &EigenTable<T>, x: T, eps: T) -> Result<T> {
    positive(x, "I₁")?;
    let kernel = SigmaKernel::new(table, eps * T::lit(1e-3))?;
    let half_b0 = T::lit(0.5) * table.b0();
    let integrand = |t: T| (kernel.regular_real(t) + half_b0) * (-x * t).exp();
    let spec = spec_for(eps).splits([T::one() / x, T::lit(2.0)]);
    Ok(integrate_from(integrand, T::zero(), &spec)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limit_constants() {
        let inf = EigenTable::new(KoshParam::<f64>::Infinity).unwrap();
        assert!((euler_const_1(&inf, 1e-12).unwrap() - EULER_GAMMA).abs() < 1e-15);
        let zero = EigenTable::new(KoshParam::<f64>::Zero).unwrap();
        assert!((euler_const_2(&zero, 1e-12).unwrap() + 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn first_constant_integral_matches_limit_definition() {
        let t = EigenTable::new(KoshParam::Finite(1.0f64)).unwrap();
        let a = euler_const_1(&t, 1e-12).unwrap();
        let b = euler_const_1_series(&t).unwrap();
        assert!((a - b).abs() < 1e-11, "{a} vs {b}");
    }

    #[test]
    fn second_constant_integral_matches_limit_definition() {
        let t = EigenTable::new(KoshParam::Finite(1.0f64)).unwrap();
        let a = euler_const_2(&t, 1e-12).unwrap();
        let b = euler_const_2_series(&t, 40, 1e-12).unwrap();
        assert!((a - b).abs() < 1e-9, "{a} vs {b}");
    }

    #[test]
    fn psi_one_paths_agree() {
        let t = EigenTable::new(KoshParam::Finite(1.0f64)).unwrap();
        for &x in &[0.5, 1.0, 3.0] {
            let a = psi_1p(&t, x, 1e-12).unwrap();
            let b = psi_1p_series(&t, x).unwrap();
            assert!((a - b).abs() < 1e-10, "x={x}: {a} vs {b}");
            let i1 = i1_laplace(&t, x, 1e-12).unwrap();
            assert!((i1 + phi_1p(&t, x, 1e-12).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn psi_reference_values() {
        let g = EULER_GAMMA;
        assert!((classical_psi(0.5f64).unwrap() + g + 4f64.ln()).abs() < 1e-14);
        assert!((classical_psi(1.0f64).unwrap() + g).abs() < 4e-15);
    }

    #[test]
    fn bernoulli_paths_agree() {
        let t = EigenTable::new(KoshParam::Finite(1.0f64)).unwrap();
        for k in 1..=3 {
            let a = gen_bernoulli(&t, k, 1e-12).unwrap();
            let b = gen_bernoulli_from_zeta(&t, k, 1e-13).unwrap();
            assert!(((a - b) / b).abs() < 1e-10, "k={k}: {a} vs {b}");
        }
    }
}
