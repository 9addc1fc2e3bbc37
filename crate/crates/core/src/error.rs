use num_complex::Complex64;

/// Errors produced by the numerical layers of this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A precondition on the inputs was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// Euler Gamma evaluated at a non-positive integer.
    #[error("gamma pole at non-positive integer z = {0}")]
    GammaPole(f64),

    /// A result left the representable floating-point range.
    #[error("overflow in {0}")]
    Overflow(&'static str),

    /// The regulating parameter sits too close to the pole set {4, 2, 0, -2, ...}.
    #[error("u = {u} is within {guard:e} of the pole set {{4, 2, 0, -2, ...}}")]
    PoleProximity { u: Complex64, guard: f64 },

    /// Adaptive integration exhausted its subdivision budget.
    #[error(
        "quadrature did not converge after {subdivisions} subdivisions \
         (error estimate {error_estimate:e})"
    )]
    QuadratureNotConverged {
        subdivisions: usize,
        error_estimate: f64,
    },

    /// The integrand returned NaN or infinity.
    #[error("integrand returned a non-finite value near {at}")]
    NonFiniteIntegrand { at: f64 },

    /// A finite-difference step size degenerated to zero.
    #[error("finite-difference step underflowed for {0}")]
    StepUnderflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
