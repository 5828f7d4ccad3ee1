//! Error type shared by all numerical routines.

use std::fmt;

/// Errors produced by the numerical kernel and the geometry built on it.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument was outside the documented domain of the operation.
    Domain(String),
    /// Adaptive quadrature exhausted its subdivision budget before the
    /// requested tolerance was certified. The partial result is carried so
    /// diagnostics can report it, but callers must not trust it.
    NonConvergent {
        value: f64,
        error_estimate: f64,
        subdivisions: usize,
    },
    /// Independent computation routes that must agree did not.
    Consistency(String),
    /// The ODE integrator's step size underflowed, which signals stiffness
    /// or a singularity of the right-hand side.
    StepSizeUnderflow { t: f64 },
    /// A tangent direction degenerated to zero length.
    DegenerateTangent,
    /// Three points were too close to collinear to define a circle.
    DegenerateTriangle,
    /// A sampled configuration collapsed (coincident or collinear points).
    DegenerateConfig(String),
    /// A constraint solve found no root in the feasible bracket.
    NoSolution(String),
    /// Bisection failed to bracket a root that must exist; signals a bug.
    RootNotFound(String),
    /// A map projection was evaluated at a pole where it is undefined.
    Pole(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NonConvergent {
                value,
                error_estimate,
                subdivisions,
            } => write!(
                f,
                "quadrature did not converge after {subdivisions} subdivisions \
                 (value {value:e}, error estimate {error_estimate:e})"
            ),
            Error::Consistency(msg) => write!(f, "consistency error: {msg}"),
            Error::StepSizeUnderflow { t } => {
                write!(f, "step size underflow at t = {t} (stiffness or singularity)")
            }
            Error::DegenerateTangent => write!(f, "degenerate tangent vector"),
            Error::DegenerateTriangle => write!(f, "degenerate triangle"),
            Error::DegenerateConfig(msg) => write!(f, "degenerate configuration: {msg}"),
            Error::NoSolution(msg) => write!(f, "no solution: {msg}"),
            Error::RootNotFound(msg) => write!(f, "root not found: {msg}"),
            Error::Pole(msg) => write!(f, "pole error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
