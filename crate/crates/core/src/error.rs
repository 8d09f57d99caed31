use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A profile took a negative value where a radius is required.
    #[error("profile is negative at x = {x} (f(x) = {value})")]
    NegativeProfile { x: f64, value: f64 },

    /// The integrand produced NaN or an infinity at an interior sample.
    #[error("integrand is not finite at x = {x}")]
    NonFiniteIntegrand { x: f64 },

    /// Adaptive refinement ran out of depth before meeting the tolerance.
    #[error("quadrature did not converge: best estimate {estimate}, error estimate {error_estimate}")]
    Convergence { estimate: f64, error_estimate: f64 },

    /// `f'` changes sign, so the monotone closed form does not apply.
    #[error("profile is not monotone: f'({x0}) = {d0} but f'({x1}) = {d1}")]
    NotMonotone { x0: f64, d0: f64, x1: f64, d1: f64 },

    /// A profile or shape description could not be parsed.
    #[error("invalid spec: {0}")]
    Spec(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
