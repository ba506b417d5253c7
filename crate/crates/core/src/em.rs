//! Euler–Maclaurin tails for sums over the eigenvalue index.
//!
//! Treat `λ(j)` as a smooth function of a continuous index through
//! `j = λ + 1/2 − atan(p/λ)/π`. Differentiating gives `dλ/dj = w(λ)`, so for any
//! `F`
//!
//! ```text
//! Σ_{j≥N} w_j F(λ_j) = ∫_{λ_N}^∞ F(λ) dλ + g(N)/2 − Σ_k B_{2k}/(2k) · [g]_{2k−1},
//! ```
//!
//! with `g(j) = w(λ(j))·F(λ(j))` and `[g]_m` its m-th Taylor coefficient at `j = N`.
//! The Taylor coefficients of `λ(N + ε)` come from integrating the ODE
//! `λ' = w(λ)` in power series; they depend only on `p` and `N`, so they are
//! cached per table as an [`Anchor`].

use crate::classical::BERNOULLI_EVEN;
use crate::jet::{self, Coeff};
use crate::roots::KoshParam;
use crate::Real;

/// Indices at which Taylor data of `λ(j)` is cached.
pub(crate) const ANCHOR_INDICES: [usize; 3] = [32, 64, 128];

/// Length of the cached series (highest derivative order + 1).
pub(crate) const EM_ORDER: usize = 42;

#[derive(Debug, Clone)]
pub(crate) struct Anchor<T> {
    pub n: usize,
    /// Taylor coefficients of `λ(n + ε)`.
    pub lam: Vec<T>,
    /// Taylor coefficients of `w(λ(n + ε))`.
    pub w: Vec<T>,
}

fn weight_series<T: Real>(p: T, lam: &[T]) -> Vec<T> {
    let c = p * T::FRAC_1_PI();
    let mut den = jet::mul(lam, lam);
    den[0] += p * p + c;
    // w = 1 − c/(λ² + p² + c) avoids the cancellation in num/den for large λ.
    let mut w = jet::scale(&jet::recip(&den), -c);
    w[0] += T::one();
    w
}

pub(crate) fn build_anchor<T: Real>(p: KoshParam<T>, n: usize, lambda_n: T) -> Anchor<T> {
    let mut lam = vec![T::zero(); EM_ORDER];
    lam[0] = lambda_n;
    match p {
        KoshParam::Finite(pv) => {
            for k in 0..EM_ORDER - 1 {
                let w = weight_series(pv, &lam[..=k]);
                lam[k + 1] = w[k] / T::from_index(k + 1);
            }
            let w = weight_series(pv, &lam);
            Anchor { n, lam, w }
        }
        _ => {
            lam[1] = T::one();
            let mut w = vec![T::zero(); EM_ORDER];
            w[0] = T::one();
            Anchor { n, lam, w }
        }
    }
}

/// Tail `Σ_{j≥N} w_j F(λ_j)` from the Taylor series of `F(λ(N + ε))` and the
/// closed-form integral `∫_{λ_N}^∞ F`. Returns the value and the magnitude of
/// the last correction used as an error estimate.
///
/// Corrections are added while they decrease in size (the expansion is
/// asymptotic in general).
pub(crate) fn tail<T: Real, S: Coeff>(
    anchor: &Anchor<T>,
    f_series: &[S],
    integral: S,
    lift: impl Fn(T) -> S,
    norm: impl Fn(S) -> T,
) -> (S, T) {
    let w = jet::lift(&anchor.w, &lift);
    let g = jet::mul(&w, f_series);
    let half = lift(T::lit(0.5));
    let mut total = integral + g[0] * half;
    let mut last = T::infinity();
    let mut k = 1;
    while 2 * k < g.len() && k < BERNOULLI_EVEN.len() {
        let coeff = lift(T::lit(BERNOULLI_EVEN[k] / (2 * k) as f64));
        let term = coeff * g[2 * k - 1];
        let size = norm(term);
        if size > last {
            break;
        }
        total = total - term;
        last = size;
        if size == T::zero() {
            break;
        }
        k += 1;
    }
    (total, if last.is_finite() { last } else { T::zero() })
}
