//! Crate-wide error type.

/// Errors produced by the numerical routines.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// The requested integral has no finite value.
    #[error("divergent integral: {0}")]
    Divergent(String),

    /// Evaluating the integrand would overflow f64 range.
    #[error("overflow-unsafe input: {0}")]
    Overflow(String),

    /// The adaptive rule ran out of subdivisions before meeting the tolerance.
    /// Carries the best estimate and its error bound.
    #[error("quadrature did not converge after {subdivisions} subdivisions: best={best:e}, err_bound={err_bound:e}")]
    NonConvergence {
        best: f64,
        err_bound: f64,
        subdivisions: usize,
    },

    /// The periodic rule hit its node cap before successive refinements agreed.
    #[error("periodic rule did not converge below tolerance at {cap} nodes: best={best:e}")]
    NodeCap { cap: usize, best: f64 },

    /// Invalid argument or precondition violation.
    #[error("invalid input: {0}")]
    Domain(String),

    /// A denominator vanished at this sample; the point must be excluded.
    #[error("singular sample at x={x}")]
    SingularSample { x: f64 },

    /// No sign change on the requested bracket.
    #[error("no sign change on [{lo}, {hi}]: f(lo)={f_lo:e}, f(hi)={f_hi:e}")]
    NoBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
