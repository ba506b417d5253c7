//! Truncated power series `a_0 + a_1 ε + … + a_{n−1} ε^{n−1}`.
//!
//! Only the handful of operations needed to Taylor-expand compositions such as
//! `w(λ(j))·λ(j)^{−s}` around an integer `j = N` are provided. Coefficients are
//! plain slices so real and complex series share one implementation.

use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

pub(crate) trait Coeff: Copy + Num + FromPrimitive + Neg<Output = Self> {}
impl<S: Copy + Num + FromPrimitive + Neg<Output = S>> Coeff for S {}

fn k_of<S: Coeff>(k: usize) -> S {
    S::from_usize(k).expect("index fits")
}

pub(crate) fn add<S: Coeff>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

pub(crate) fn scale<S: Coeff>(a: &[S], c: S) -> Vec<S> {
    a.iter().map(|&x| x * c).collect()
}

pub(crate) fn mul<S: Coeff>(a: &[S], b: &[S]) -> Vec<S> {
    let n = a.len().min(b.len());
    let mut out = vec![S::zero(); n];
    for (i, &ai) in a.iter().enumerate().take(n) {
        if ai.is_zero() {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(n - i) {
            out[i + j] = out[i + j] + ai * bj;
        }
    }
    out
}

pub(crate) fn recip<S: Coeff>(a: &[S]) -> Vec<S> {
    let n = a.len();
    let mut out = vec![S::zero(); n];
    out[0] = S::one() / a[0];
    for k in 1..n {
        let mut acc = S::zero();
        for j in 1..=k {
            acc = acc + a[j] * out[k - j];
        }
        out[k] = -acc * out[0];
    }
    out
}

/// `exp(a)` given `exp(a_0)`.
pub(crate) fn exp<S: Coeff>(a: &[S], exp_a0: S) -> Vec<S> {
    let n = a.len();
    let mut out = vec![S::zero(); n];
    out[0] = exp_a0;
    for k in 1..n {
        let mut acc = S::zero();
        for j in 1..=k {
            acc = acc + k_of::<S>(j) * a[j] * out[k - j];
        }
        out[k] = acc / k_of(k);
    }
    out
}

/// `ln(a)` given `ln(a_0)`.
pub(crate) fn ln<S: Coeff>(a: &[S], ln_a0: S) -> Vec<S> {
    let n = a.len();
    let mut out = vec![S::zero(); n];
    out[0] = ln_a0;
    for k in 1..n {
        let mut acc = S::zero();
        for j in 1..k {
            acc = acc + k_of::<S>(j) * out[j] * a[k - j];
        }
        out[k] = (a[k] - acc / k_of(k)) / a[0];
    }
    out
}

/// Lifts a real series into a complex (or any other) coefficient ring.
pub(crate) fn lift<R: Copy, S: Coeff>(a: &[R], f: impl Fn(R) -> S) -> Vec<S> {
    a.iter().map(|&x| f(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_identity_series_is_exponential() {
        let a = [0.0f64, 1.0, 0.0, 0.0, 0.0, 0.0];
        let e = exp(&a, 1.0);
        let mut fact = 1.0;
        for (k, c) in e.iter().enumerate() {
            if k > 0 {
                fact *= k as f64;
            }
            assert!((c - 1.0 / fact).abs() < 1e-15);
        }
    }

    #[test]
    fn ln_inverts_exp() {
        let a = [0.3f64, -0.7, 0.2, 0.05, -0.01];
        let e = exp(&a, 0.3f64.exp());
        let back = ln(&e, 0.3);
        for (x, y) in a.iter().zip(&back) {
            assert!((x - y).abs() < 1e-14);
        }
    }

    #[test]
    fn reciprocal_times_series_is_one() {
        let a = [2.0f64, 0.5, -1.0, 3.0];
        let r = recip(&a);
        let one = mul(&a, &r);
        assert!((one[0] - 1.0).abs() < 1e-15);
        for c in &one[1..] {
            assert!(c.abs() < 1e-14);
        }
    }
}
