use num_complex::Complex64;

/// Errors shared by the exact and floating-point layers.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Evaluation requested too close to the logarithmic singularities at z = ±1.
    #[error("input z = {0} is within the exclusion radius of the singular points ±1")]
    NearSingularity(Complex64),

    /// Dilogarithm argument on the principal branch cut [1, ∞).
    #[error("dilogarithm branch cut: z = {0} lies on the real ray [1, ∞)")]
    BranchCut(Complex64),

    /// Node doubling exhausted without two quadrature levels agreeing.
    #[error("quadrature did not converge within {0} nodes")]
    QuadratureDivergence(usize),

    /// A computation produced NaN or infinity.
    #[error("non-finite value produced in {0}")]
    NonFinite(&'static str),

    /// Adaptive ODE integration drove the step size below the floor.
    #[error("ODE step size underflow at t = {0}")]
    StepUnderflow(f64),

    /// A sign-change scan failed to bracket the target root.
    #[error("no sign change found while bracketing {0}")]
    BracketFailure(&'static str),

    /// Boundary tangent formula degenerates when q(ζ) = h(ζ).
    #[error("tangent formula degenerates: |h - q| = {0:.3e} at theta = {1}")]
    DegenerateTangent(f64, f64),

    /// Parameter outside the documented domain of an operation.
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
