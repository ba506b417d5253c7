//! Koshliakov zeta functions and their modular relations.
//!
//! The library is organised bottom-up:
//!
//! * [`roots`] solves `p·sin(πλ) + λ·cos(πλ) = 0` and caches the eigenvalues
//!   `λ_j` with their weights `w_j` in an [`roots::EigenTable`].
//! * [`quadrature`] is the adaptive Gauss–Kronrod engine used by every
//!   integral representation.
//! * [`sigma`] holds the kernels `σ(z)`, `σ_p(z)` and `1/(σ(t)e^{2πt} − 1)`.
//! * [`kzeta`] evaluates `ζ_p`, `η_p`, `ω_p`, `ξ_p`, `Ξ_p` and the classical
//!   Riemann functions.
//! * [`special`] provides the generalized Euler constants, generalized
//!   Bernoulli numbers, the digamma analogues `ψ_{1,p}`, `ψ_{2,p}` and friends.
//! * [`series`] sums the Lambert-type series and the `Φ_p` sums.
//! * [`identities`] checks every modular relation numerically and returns a
//!   [`identities::VerifyReport`].
//!
//! All numerics below [`identities`] are generic over [`Real`] (`f32` or
//! `f64`). The `*64` aliases at the crate root name the `f64`
//! instantiations used by the verifiers and the command-line tool.

// `!(x > 0)` is used on purpose so that NaN lands in the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::excessive_precision, clippy::needless_range_loop)]

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

pub mod classical;
pub mod error;
pub mod identities;
pub mod kzeta;
pub mod quadrature;
pub mod roots;
pub mod series;
pub mod sigma;
pub mod special;

mod em;
mod jet;

pub use error::{KoshError, Result};
pub use num_complex::Complex;

/// Floating-point scalar accepted by the numerical routines.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into this scalar type.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Converts a count or index into this scalar type.
    #[inline]
    fn from_index(n: usize) -> Self {
        Self::from_usize(n).expect("index representable")
    }

    /// Lossy conversion used for reports and error payloads.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex number over `T`.
pub type C<T> = Complex<T>;

pub type KoshParam64 = roots::KoshParam<f64>;
pub type EigenTable64 = roots::EigenTable<f64>;
pub type EigenTable32 = roots::EigenTable<f32>;
pub type QuadSpec64 = quadrature::QuadSpec<f64>;
pub type QuadResult64 = quadrature::QuadResult<f64>;
pub type ZetaEval64 = kzeta::ZetaEval<f64>;
pub type LambertSum64 = series::LambertSum<f64>;
pub type GenConstants64 = special::GenConstants<f64>;
