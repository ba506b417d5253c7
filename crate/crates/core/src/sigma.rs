//! The kernels `σ(z) = (p+z)/(p−z)`, `σ_p(z) = Σ w_j e^{−λ_j z}` and
//! `K(t) = 1/(σ(t)e^{2πt} − 1)`.
//!
//! `σ_p` has a simple pole at the origin with residue 1. For `|z| < 2` it is
//! summed directly up to an Euler–Maclaurin anchor and the remainder is
//! obtained from the Euler–Maclaurin expansion in the index, which also gives
//! the pole-free part `σ_p(z) − 1/z` without cancellation. Larger arguments use
//! plain truncated summation.

use num_complex::Complex;

use crate::classical::{bose_regular, expm1_c, expm1_minus_x_over_x};
use crate::em::{self, Anchor};
use crate::error::{KoshError, Result};
use crate::jet;
use crate::roots::{EigenTable, KoshParam};
use crate::Real;

const EM_RADIUS: f64 = 2.0;
const MAX_DIRECT_TERMS: usize = 200_000;

/// `σ(z) = (p + z)/(p − z)`; `1` at `Infinity`, `−1` at `Zero`.
pub fn sigma_ratio<T: Real>(p: KoshParam<T>, z: Complex<T>) -> Result<Complex<T>> {
    match p {
        KoshParam::Infinity => Ok(Complex::new(T::one(), T::zero())),
        KoshParam::Zero => Ok(Complex::new(-T::one(), T::zero())),
        KoshParam::Finite(pv) => {
            let den = Complex::new(pv, T::zero()) - z;
            if den.norm() == T::zero() {
                return Err(KoshError::Pole(format!("σ(z) at z = p = {pv}")));
            }
            Ok((z + pv) / den)
        }
    }
}

/// `σ_p` evaluator bound to an eigenvalue table.
#[derive(Debug, Clone, Copy)]
pub struct SigmaKernel<'a, T: Real> {
    table: &'a EigenTable<T>,
    eps: T,
}

impl<'a, T: Real> SigmaKernel<'a, T> {
    pub fn new(table: &'a EigenTable<T>, eps: T) -> Result<Self> {
        if !(eps > T::zero()) {
            return Err(KoshError::InvalidParameter(format!(
                "truncation tolerance must be positive, got {eps}"
            )));
        }
        Ok(SigmaKernel { table, eps })
    }

    pub fn param(&self) -> KoshParam<T> {
        self.table.param()
    }

    pub fn table(&self) -> &'a EigenTable<T> {
        self.table
    }

    /// `σ_p(z)` for `Re z > 0`.
    pub fn sigma_p(&self, z: Complex<T>) -> Result<Complex<T>> {
        if !(z.re > T::zero()) {
            return Err(KoshError::Domain(format!("σ_p needs Re z > 0, got {z}")));
        }
        let one = Complex::new(T::one(), T::zero());
        match self.param() {
            KoshParam::Infinity => Ok(one / expm1_c(z)),
            KoshParam::Zero => Ok(one / ((z * T::lit(0.5)).sinh() * T::lit(2.0))),
            KoshParam::Finite(_) => {
                if z.norm() < T::lit(EM_RADIUS) {
                    Ok(self.regular_em(z) + z.inv())
                } else {
                    self.direct(z)
                }
            }
        }
    }

    /// Real `σ_p(x)`, `x > 0`.
    pub fn sigma_p_real(&self, x: T) -> Result<T> {
        if !(x > T::zero()) {
            return Err(KoshError::Domain(format!("σ_p needs x > 0, got {x}")));
        }
        match self.param() {
            KoshParam::Infinity => return Ok(T::one() / x.exp_m1()),
            KoshParam::Zero => return Ok(T::lit(0.5) / (x * T::lit(0.5)).sinh()),
            KoshParam::Finite(_) => {}
        }
        if x < T::lit(EM_RADIUS) {
            return Ok(self.regular_real(x) + T::one() / x);
        }
        self.sigma_p(Complex::new(x, T::zero())).map(|v| v.re)
    }

    /// `σ_p(x) − 1/x` for real `x > 0`; bounded as `x → 0⁺`.
    pub fn regular_real(&self, x: T) -> T {
        match self.param() {
            KoshParam::Infinity => bose_regular(x) - T::lit(0.5),
            KoshParam::Zero => bose_regular(x * T::lit(0.5)) - bose_regular(x),
            KoshParam::Finite(_) => {
                if x < T::lit(EM_RADIUS) {
                    self.regular_em(Complex::new(x, T::zero())).re
                } else {
                    self.direct(Complex::new(x, T::zero()))
                        .map(|v| v.re - T::one() / x)
                        .unwrap_or(T::nan())
                }
            }
        }
    }

    fn direct(&self, z: Complex<T>) -> Result<Complex<T>> {
        let re = z.re;
        let n = ((self.eps.recip().ln() / re).ceil().as_f64() as usize).saturating_add(10);
        if n > MAX_DIRECT_TERMS {
            return Err(KoshError::SeriesNonConvergence(format!(
                "σ_p({z}) needs more than {MAX_DIRECT_TERMS} terms"
            )));
        }
        let mut sum = Complex::new(T::zero(), T::zero());
        for j in (1..=n).rev() {
            let (l, w) = self.table.pair(j);
            sum += (-z * l).exp() * w;
        }
        Ok(sum)
    }

    /// `σ_p(z) − 1/z` via the Euler–Maclaurin tail (finite `p`, small `|z|`).
    fn regular_em(&self, z: Complex<T>) -> Complex<T> {
        let anchor: &Anchor<T> = self
            .table
            .anchor_at_least(1)
            .expect("tables always carry anchors");
        let n = anchor.n;
        let mut head = Complex::new(T::zero(), T::zero());
        for j in (1..n).rev() {
            let (l, w) = self.table.pair(j);
            head += (-z * l).exp() * w;
        }
        let order = if z.norm() <= T::one() { 26 } else { anchor.lam.len() };
        let lam_n = anchor.lam[0];
        let arg: Vec<Complex<T>> = anchor.lam[..order]
            .iter()
            .map(|&c| -z * c)
            .collect();
        let f = jet::exp(&arg, (-z * lam_n).exp());
        // ∫_{λ_N}^∞ e^{−λz} dλ − 1/z = expm1(−λ_N z)/z
        let integral = expm1_c(-z * lam_n) / z;
        let (tail, _) = em::tail(
            anchor,
            &f,
            integral,
            |x| Complex::new(x, T::zero()),
            |c: Complex<T>| c.norm(),
        );
        head + tail
    }

    /// `K(t) = 1/(σ(t)e^{2πt} − 1)`.
    pub fn inv_sigma_exp(&self, t: T) -> Result<T> {
        inv_sigma_exp(self.param(), t)
    }
}

/// `σ_p(z)` with a freshly chosen truncation tolerance.
pub fn sigma_p<T: Real>(table: &EigenTable<T>, z: Complex<T>, eps: T) -> Result<Complex<T>> {
    SigmaKernel::new(table, eps)?.sigma_p(z)
}

/// `K(t) = 1/(σ(t)e^{2πt} − 1)` for real `t > 0`.
///
/// Finite `p` uses `(p−t)/((p+t)·expm1(2πt) + 2t)`, which has no cancellation
/// near `t = 0` and no overflow for large `t`.
pub fn inv_sigma_exp<T: Real>(p: KoshParam<T>, t: T) -> Result<T> {
    if t == T::zero() {
        return Err(KoshError::Pole("K(t) at t = 0".into()));
    }
    if !(t > T::zero()) {
        return Err(KoshError::Domain(format!("K(t) needs t > 0, got {t}")));
    }
    let x = T::TAU() * t;
    Ok(match p {
        KoshParam::Infinity => T::one() / x.exp_m1(),
        KoshParam::Zero => -T::one() / (x.exp() + T::one()),
        KoshParam::Finite(pv) => {
            if t <= T::one() {
                (pv - t) / ((pv + t) * x.exp_m1() + T::lit(2.0) * t)
            } else {
                let e = (-x).exp();
                (pv - t) * e / ((pv + t) - (pv - t) * e)
            }
        }
    })
}

/// `K(t) − B₀^{(p)}/(2πt)`, bounded as `t → 0⁺`.
pub fn inv_sigma_exp_regular<T: Real>(p: KoshParam<T>, t: T) -> Result<T> {
    if !(t > T::zero()) {
        return Err(KoshError::Domain(format!("K(t) needs t > 0, got {t}")));
    }
    let x = T::TAU() * t;
    match p {
        KoshParam::Infinity => Ok(bose_regular(x) - T::lit(0.5)),
        KoshParam::Zero => inv_sigma_exp(p, t),
        KoshParam::Finite(pv) => {
            let b0 = p.b0();
            if x < T::epsilon() {
                // The expansion is −½ + O(x); subnormal t would only add noise.
                Ok(-T::lit(0.5))
            } else if t <= T::one() {
                // Numerator and denominator are both divided by 2πt so that
                // nothing underflows as t → 0⁺.
                let e2_over_x = expm1_minus_x_over_x(x);
                let d = (pv + t) * x.exp_m1() + T::lit(2.0) * t;
                let num = t * (T::one() + b0) + b0 * (pv + t) * e2_over_x;
                Ok(-num / d)
            } else {
                Ok(inv_sigma_exp(p, t)? - b0 / x)
            }
        }
    }
}

/// `K(z)` for complex `z` off the poles of the kernel (used on vertical rays).
pub fn inv_sigma_exp_c<T: Real>(p: KoshParam<T>, z: Complex<T>) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    let x = z * T::TAU();
    match p {
        KoshParam::Infinity => one / expm1_c(x),
        KoshParam::Zero => -one / (x.exp() + T::one()),
        KoshParam::Finite(pv) => {
            let pc = Complex::new(pv, T::zero());
            if z.re <= T::one() {
                (pc - z) / ((pc + z) * expm1_c(x) + z * T::lit(2.0))
            } else {
                let e = (-x).exp();
                (pc - z) * e / ((pc + z) - (pc - z) * e)
            }
        }
    }
}

/// `K(t)` from the geometric expansion `Σ_{k≥1} ((p−t)/(p+t))^{k−1} e^{−2πkt}`
/// times `(p−t)/(p+t)`; an independent formula kept for cross-checks.
pub fn inv_sigma_exp_geometric<T: Real>(p: KoshParam<T>, t: T, eps: T) -> Result<T> {
    let r = match p {
        KoshParam::Infinity => T::one(),
        KoshParam::Zero => -T::one(),
        KoshParam::Finite(pv) => (pv - t) / (pv + t),
    };
    let q = r * (-T::TAU() * t).exp();
    if !(q.abs() < T::one()) {
        return Err(KoshError::Domain("geometric expansion of K diverges".into()));
    }
    let mut term = q;
    let mut sum = T::zero();
    for _ in 0..1_000_000 {
        sum += term;
        if term.abs() <= eps * sum.abs() {
            return Ok(sum);
        }
        term *= q;
    }
    Err(KoshError::SeriesNonConvergence("geometric expansion of K".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_kernel_is_continuous_down_to_subnormal_t() {
        for pv in [0.2, 1.0, 5.0] {
            let p = KoshParam::Finite(pv);
            for t in [1e-320, 1e-300, 1e-170, 1e-30] {
                let r: f64 = inv_sigma_exp_regular(p, t).unwrap();
                assert!((r + 0.5).abs() < 1e-15, "p={pv} t={t} r={r}");
            }
        }
    }
    use std::f64::consts::{E, PI};

    #[test]
    fn ratio_examples() {
        let two = KoshParam::Finite(2.0f64);
        assert_eq!(sigma_ratio(two, Complex::new(1.0, 0.0)).unwrap().re, 3.0);
        assert_eq!(sigma_ratio(two, Complex::new(0.0, 0.0)).unwrap().re, 1.0);
        assert!(sigma_ratio(two, Complex::new(2.0, 0.0)).is_err());
        assert_eq!(sigma_ratio(KoshParam::<f64>::Zero, Complex::new(5.0, 1.0)).unwrap().re, -1.0);
    }

    #[test]
    fn limit_kernels() {
        let inf = EigenTable::new(KoshParam::<f64>::Infinity).unwrap();
        let k = SigmaKernel::new(&inf, 1e-15).unwrap();
        assert!((k.sigma_p_real(1.0).unwrap() - 1.0 / (E - 1.0)).abs() < 1e-15);
        let zero = EigenTable::new(KoshParam::<f64>::Zero).unwrap();
        let k = SigmaKernel::new(&zero, 1e-15).unwrap();
        let t = 0.3;
        let want = (PI * t).exp() / (2.0 * PI * t).exp_m1();
        assert!((k.sigma_p_real(2.0 * PI * t).unwrap() - want).abs() < 1e-14);
    }

    #[test]
    fn em_and_direct_paths_agree_where_both_apply() {
        let table = EigenTable::new(KoshParam::Finite(1.0f64)).unwrap();
        let k = SigmaKernel::new(&table, 1e-17).unwrap();
        for &x in &[0.7, 1.3, 1.9] {
            let em = k.regular_em(Complex::new(x, 0.0)).re + 1.0 / x;
            let direct = k.direct(Complex::new(x, 0.0)).unwrap().re;
            assert!((em - direct).abs() < 1e-13 * direct, "x={x}: {em} vs {direct}");
        }
    }

    #[test]
    fn regular_part_is_bounded_near_zero() {
        let table = EigenTable::new(KoshParam::Finite(1.0f64)).unwrap();
        let k = SigmaKernel::new(&table, 1e-16).unwrap();
        let a = k.regular_real(1e-9);
        let b = k.regular_real(1e-6);
        assert!(a.is_finite() && (a - b).abs() < 1e-5);
    }

    #[test]
    fn kernel_forms_agree() {
        let p = KoshParam::Finite(1.0f64);
        for &t in &[0.05, 0.5, 0.99, 1.01, 3.0] {
            let a = inv_sigma_exp(p, t).unwrap();
            let direct = 1.0 / ((1.0 + t) / (1.0 - t) * (2.0 * PI * t).exp() - 1.0);
            assert!((a - direct).abs() < 1e-14 * direct.abs().max(1e-300) + 1e-300);
            let g = inv_sigma_exp_geometric(p, t, 1e-17).unwrap();
            assert!((a - g).abs() <= 1e-14 * a.abs(), "t={t}");
            let r = inv_sigma_exp_regular(p, t).unwrap();
            assert!((r + p.b0() / (2.0 * PI * t) - a).abs() < 1e-12 * a.abs().max(1.0));
        }
    }

    #[test]
    fn kernel_rejects_origin() {
        assert!(matches!(
            inv_sigma_exp(KoshParam::Finite(1.0), 0.0),
            Err(KoshError::Pole(_))
        ));
    }
}
