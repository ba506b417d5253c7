//! Eigenvalues of `p·sin(πλ) + λ·cos(πλ) = 0` and their weights.
//!
//! For finite `p > 0` the j-th positive root lies in `(j − 1/2, j)`. Writing
//! `λ = j − 1/2 + u` turns the equation into
//!
//! ```text
//! h(u) = p·cos(πu) − λ·sin(πu) = 0,   u ∈ (0, 1/2),
//! ```
//!
//! where `h(0) = p > 0`, `h(1/2) = −j < 0` and `h` is strictly decreasing, so the
//! bracket is exact and no trigonometric argument grows with `j`. Since
//! `f(λ) = (−1)^{j+1}·h(u)`, residuals reported here are residuals of `f`.

use crate::em::{build_anchor, Anchor, ANCHOR_INDICES};
use crate::error::{KoshError, Result};
use crate::Real;

/// Above this value a finite `p` is replaced by [`KoshParam::Infinity`].
pub const INFINITY_CUTOFF: f64 = 1e8;

/// Indices above this use the asymptotic start plus a Newton step.
pub const LARGE_INDEX: usize = 10_000;

/// Default number of cached roots in a table built by [`EigenTable::new`].
pub const DEFAULT_TABLE_SIZE: usize = 256;

/// Default root tolerance.
pub const DEFAULT_ROOT_TOL: f64 = 1e-13;

const BISECTION_WIDTH: f64 = 1e-3;
const MAX_NEWTON: usize = 60;

/// The deformation parameter `p`, with the two limits as first-class values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KoshParam<T: Real = f64> {
    Finite(T),
    Zero,
    Infinity,
}

impl<T: Real> KoshParam<T> {
    /// Validates a finite `p`. Values above [`INFINITY_CUTOFF`] become `Infinity`.
    pub fn finite(p: T) -> Result<Self> {
        if !(p > T::zero()) || !p.is_finite() {
            return Err(KoshError::InvalidParameter(format!(
                "p must be finite and positive, got {p}"
            )));
        }
        if p > T::lit(INFINITY_CUTOFF) {
            return Ok(KoshParam::Infinity);
        }
        Ok(KoshParam::Finite(p))
    }

    /// Finite value of `p`, if any.
    pub fn value(&self) -> Option<T> {
        match *self {
            KoshParam::Finite(p) => Some(p),
            _ => None,
        }
    }

    /// `B₀^{(p)} = 1/(1 + 1/(πp))`; 0 at `Zero`, 1 at `Infinity`.
    pub fn b0(&self) -> T {
        match *self {
            KoshParam::Finite(p) => {
                let pp = T::PI() * p;
                pp / (pp + T::one())
            }
            KoshParam::Zero => T::zero(),
            KoshParam::Infinity => T::one(),
        }
    }

    /// Short label, e.g. `1`, `zero`, `inf`.
    pub fn label(&self) -> String {
        match self {
            KoshParam::Finite(p) => format!("{p}"),
            KoshParam::Zero => "zero".into(),
            KoshParam::Infinity => "inf".into(),
        }
    }

    /// Converts between scalar types.
    pub fn cast<U: Real>(&self) -> KoshParam<U> {
        match *self {
            KoshParam::Finite(p) => KoshParam::Finite(U::lit(p.as_f64())),
            KoshParam::Zero => KoshParam::Zero,
            KoshParam::Infinity => KoshParam::Infinity,
        }
    }
}

/// `h(u)` and `h'(u)` for the shifted equation.
fn shifted<T: Real>(p: T, j: usize, u: T) -> (T, T) {
    let pi = T::PI();
    let lam = T::from_index(j) - T::lit(0.5) + u;
    let (s, c) = (pi * u).sin_cos();
    let h = p * c - lam * s;
    let dh = -(p * pi + T::one()) * s - lam * pi * c;
    (h, dh)
}

/// Returns `λ_j` and the absolute residual `|f(λ_j)|`.
pub fn solve_eigenvalue_with_residual<T: Real>(
    p: KoshParam<T>,
    j: usize,
    tol: T,
) -> Result<(T, T)> {
    if j == 0 {
        return Err(KoshError::InvalidParameter("eigenvalue index starts at 1".into()));
    }
    if !(tol > T::zero()) {
        return Err(KoshError::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let p = match p {
        KoshParam::Zero => return Ok((T::from_index(j) - T::lit(0.5), T::zero())),
        KoshParam::Infinity => return Ok((T::from_index(j), T::zero())),
        KoshParam::Finite(p) => p,
    };
    let half = T::lit(0.5);
    let base = T::from_index(j) - half;
    let mut lo = T::zero();
    let mut hi = half;

    let mut u = if j > LARGE_INDEX {
        // λ ≈ j − atan(j/p)/π, i.e. u ≈ 1/2 − atan(j/p)/π.
        let guess = half - (T::from_index(j) / p).atan() / T::PI();
        guess.max(lo).min(hi)
    } else {
        while hi - lo > T::lit(BISECTION_WIDTH) {
            let mid = half * (lo + hi);
            if shifted(p, j, mid).0 > T::zero() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        half * (lo + hi)
    };

    for _ in 0..MAX_NEWTON {
        let (h, dh) = shifted(p, j, u);
        if h == T::zero() {
            return Ok((base + u, T::zero()));
        }
        if h > T::zero() {
            lo = lo.max(u);
        } else {
            hi = hi.min(u);
        }
        let step = h / dh;
        if step.abs() <= tol {
            // A final step this small stays inside the bracket up to rounding.
            let done = (u - step).max(lo).min(hi);
            let (h, _) = shifted(p, j, done);
            return Ok((base + done, h.abs()));
        }
        let next = u - step;
        u = if next > lo && next < hi { next } else { half * (lo + hi) };
    }
    let (h, _) = shifted(p, j, u);
    Err(KoshError::RootNonConvergence {
        index: j,
        iterations: MAX_NEWTON,
        residual: h.abs().as_f64(),
    })
}

/// The j-th positive root (`j ≥ 1`).
pub fn solve_eigenvalue<T: Real>(p: KoshParam<T>, j: usize, tol: T) -> Result<T> {
    solve_eigenvalue_with_residual(p, j, tol).map(|(l, _)| l)
}

/// `w = (p² + λ²)/(p(p + 1/π) + λ²)`, equal to 1 in both limits.
pub fn weight<T: Real>(p: KoshParam<T>, lambda: T) -> T {
    match p {
        KoshParam::Finite(p) => {
            let l2 = lambda * lambda;
            (p * p + l2) / (p * (p + T::FRAC_1_PI()) + l2)
        }
        _ => T::one(),
    }
}

/// Cached roots, weights and residuals for one value of `p`.
///
/// Lookups past the cached range fall back to solving on the fly, so every
/// consumer may index freely; the cache only affects speed.
#[derive(Debug, Clone)]
pub struct EigenTable<T: Real = f64> {
    p: KoshParam<T>,
    tol: T,
    lambdas: Vec<T>,
    weights: Vec<T>,
    residuals: Vec<T>,
    anchors: Vec<Anchor<T>>,
}

impl<T: Real> EigenTable<T> {
    /// Table with [`DEFAULT_TABLE_SIZE`] roots at [`DEFAULT_ROOT_TOL`] (relaxed
    /// to the scalar's resolution for low-precision types).
    pub fn new(p: KoshParam<T>) -> Result<Self> {
        let tol = T::lit(DEFAULT_ROOT_TOL).max(T::epsilon() * T::lit(64.0));
        build_table(p, DEFAULT_TABLE_SIZE, tol)
    }

    pub fn param(&self) -> KoshParam<T> {
        self.p
    }

    pub fn b0(&self) -> T {
        self.p.b0()
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    pub fn lambdas(&self) -> &[T] {
        &self.lambdas
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn residuals(&self) -> &[T] {
        &self.residuals
    }

    pub fn tolerance(&self) -> T {
        self.tol
    }

    /// `λ_j`, 1-based.
    pub fn lambda(&self, j: usize) -> T {
        match self.lambdas.get(j.wrapping_sub(1)) {
            Some(&l) => l,
            None => solve_eigenvalue(self.p, j, self.tol)
                .or_else(|_| solve_eigenvalue(self.p, j, self.tol.sqrt()))
                .expect("root bracket always certified"),
        }
    }

    /// `w_j`, 1-based.
    pub fn weight(&self, j: usize) -> T {
        match self.weights.get(j.wrapping_sub(1)) {
            Some(&w) => w,
            None => weight(self.p, self.lambda(j)),
        }
    }

    /// `(λ_j, w_j)`, 1-based.
    pub fn pair(&self, j: usize) -> (T, T) {
        (self.lambda(j), self.weight(j))
    }

    /// Smallest Euler–Maclaurin anchor at index ≥ `min_index`.
    pub(crate) fn anchor_at_least(&self, min_index: usize) -> Option<&Anchor<T>> {
        self.anchors.iter().find(|a| a.n >= min_index)
    }
}

/// Builds a table of the first `count` roots.
pub fn build_table<T: Real>(p: KoshParam<T>, count: usize, tol: T) -> Result<EigenTable<T>> {
    if count == 0 {
        return Err(KoshError::InvalidParameter("table size must be at least 1".into()));
    }
    let mut lambdas = Vec::with_capacity(count);
    let mut weights = Vec::with_capacity(count);
    let mut residuals = Vec::with_capacity(count);
    for j in 1..=count {
        if let KoshParam::Finite(pv) = p {
            let (h_lo, _) = shifted(pv, j, T::zero());
            let (h_hi, _) = shifted(pv, j, T::lit(0.5));
            if !(h_lo > T::zero() && h_hi < T::zero()) {
                return Err(KoshError::Domain(format!("bracket for λ_{j} has no sign change")));
            }
        }
        let (l, r) = solve_eigenvalue_with_residual(p, j, tol)?;
        lambdas.push(l);
        weights.push(weight(p, l));
        residuals.push(r);
    }
    let mut table = EigenTable {
        p,
        tol,
        lambdas,
        weights,
        residuals,
        anchors: Vec::new(),
    };
    let anchors = ANCHOR_INDICES
        .iter()
        .map(|&n| build_anchor(p, n, table.lambda(n)))
        .collect();
    table.anchors = anchors;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limit_roots_are_exact() {
        assert_eq!(solve_eigenvalue(KoshParam::<f64>::Infinity, 5, 1e-12).unwrap(), 5.0);
        assert_eq!(solve_eigenvalue(KoshParam::<f64>::Zero, 3, 1e-12).unwrap(), 2.5);
    }

    #[test]
    fn zero_index_is_rejected() {
        assert!(solve_eigenvalue(KoshParam::Finite(1.0), 0, 1e-12).is_err());
    }

    #[test]
    fn huge_p_becomes_infinity() {
        assert_eq!(KoshParam::finite(2e8).unwrap(), KoshParam::<f64>::Infinity);
        assert!(KoshParam::finite(-1.0).is_err());
        assert!(KoshParam::finite(f64::NAN).is_err());
    }

    #[test]
    fn large_index_shortcut_agrees_with_bracketed_solve() {
        let p = KoshParam::Finite(1.5);
        let j = LARGE_INDEX + 7;
        let fast = solve_eigenvalue(p, j, 1e-13).unwrap();
        let lam = fast;
        let f = 1.5 * (std::f64::consts::PI * lam).sin() + lam * (std::f64::consts::PI * lam).cos();
        // |f'| ≈ πλ, so |f|/(πλ) bounds the distance to the true root.
        assert!(f.abs() / (std::f64::consts::PI * lam) < 1e-11, "residual {f}");
        assert!(fast > j as f64 - 0.5 && fast < j as f64);
    }

    #[test]
    fn weights_are_one_in_limits() {
        assert_eq!(weight(KoshParam::<f64>::Zero, 3.3), 1.0);
        assert_eq!(weight(KoshParam::<f64>::Infinity, 0.7), 1.0);
    }
}
