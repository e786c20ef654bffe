use thiserror::Error;

/// Errors produced by the numerical core.
#[derive(Debug, Error)]
pub enum CoreError {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// A result is too large for double precision even in scaled form.
    #[error("overflow in {op}: magnitude exp({log_magnitude}) not representable")]
    Overflow { op: &'static str, log_magnitude: f64 },

    /// y ln y = -x has no solution for ln x > -1.
    #[error("no solution: script W is undefined for x = {x} (> 1/e)")]
    NoSolution { x: f64 },

    /// A scattering denominator collapsed below the representable range.
    #[error("numeric degeneracy in {op}: |denominator| = {value:e}")]
    Degenerate { op: &'static str, value: f64 },

    /// An adaptive routine stopped on its evaluation budget.
    #[error("evaluation budget exceeded ({used} evaluations, error estimate {error_estimate:e})")]
    BudgetExceeded { used: usize, error_estimate: f64 },

    /// Rule construction got an invalid recurrence or measure parameter.
    #[error("invalid quadrature setup: {0}")]
    InvalidRule(String),

    /// Operation called with a material kind it does not apply to.
    #[error("material kind mismatch: {0}")]
    KindMismatch(String),
}

impl CoreError {
    pub(crate) fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        CoreError::Domain { op, msg: msg.into() }
    }
}
