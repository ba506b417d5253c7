use thiserror::Error;

/// Errors raised by the numerical layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum KoshError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("eigenvalue λ_{index} did not converge after {iterations} iterations (residual {residual:e})")]
    RootNonConvergence {
        index: usize,
        iterations: usize,
        residual: f64,
    },

    #[error("quadrature budget of {subdivisions} subdivisions exhausted (estimate {value:e}, error {abs_err:e})")]
    QuadratureBudget {
        subdivisions: usize,
        value: f64,
        abs_err: f64,
    },

    #[error("integrand returned a non-finite value at x = {x:e}")]
    NonFiniteIntegrand { x: f64 },

    #[error("series did not converge: {0}")]
    SeriesNonConvergence(String),

    #[error("unknown identifier `{0}`")]
    UnknownId(String),
}

impl KoshError {
    /// True for failures caused by the numerics rather than by the caller.
    pub fn is_non_convergence(&self) -> bool {
        matches!(
            self,
            KoshError::RootNonConvergence { .. }
                | KoshError::QuadratureBudget { .. }
                | KoshError::NonFiniteIntegrand { .. }
                | KoshError::SeriesNonConvergence(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, KoshError>;
