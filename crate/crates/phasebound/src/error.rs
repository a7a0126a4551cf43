use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Inversion target below the invertible range of the envelope.
    ///
    /// This is how the k = 1 applicability gates surface: callers map
    /// it to a `NOT_APPLICABLE` bound status rather than failing.
    #[error("target {target} below the invertible range (minimum {min})")]
    TargetBelowRange { target: f64, min: f64 },

    /// A numerically estimated derivative was non-positive where the
    /// Liouville potential requires `f' > 0`.
    #[error("degenerate derivative at x = {x}")]
    DegenerateDerivative { x: f64 },

    /// An iterative scheme failed to converge.  Should not happen for
    /// arguments inside the documented envelopes.
    #[error("no convergence in {0}")]
    NoConvergence(&'static str),

    /// An asymptotic tail constant was outside its expected window.
    #[error("tail constant mismatch for {pair}: expected {expected}, measured {measured}")]
    TailMismatch {
        pair: &'static str,
        expected: f64,
        measured: f64,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
