use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("d = {d} has no integral critical exponent (only d = 3, 4, 6 do)")]
    NotCritical { d: i64 },

    #[error("d = {d} is not supported here (only d = 4 and d = 6)")]
    UnsupportedCase { d: i64 },

    #[error("no real solutions for d = {d}, C = {c}")]
    NoRealSolution { d: i64, c: f64 },

    #[error("unsupported branch: {0}")]
    UnsupportedBranch(String),

    #[error("iteration did not converge: {0}")]
    Convergence(String),

    #[error("pole at or near argument {at}")]
    Pole { at: f64 },

    #[error("branch end reached at x = {x} (radicand {radicand})")]
    BranchEnd { x: f64, radicand: f64 },

    #[error("blow-up detected at t = {at}")]
    BlowUpDetected { at: f64 },

    #[error("step limit of {steps} exceeded at t = {at}")]
    StepLimitExceeded { steps: usize, at: f64 },

    #[error("no pole-free subwindow with at least {needed} points (found {found})")]
    WindowEmpty { needed: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
