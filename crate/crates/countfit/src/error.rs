use thiserror::Error;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series cancellation ratio {ratio:.3e} exceeds the guard; use the Monte Carlo path")]
    Cancellation { ratio: f64 },
    #[error("series terms exceed the overflow budget; use the Monte Carlo path")]
    Divergence,
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Cancellation { .. } => "cancellation",
            Error::Divergence => "divergence",
            Error::NoConvergence(_) => "no_convergence",
            Error::Overflow(_) => "overflow",
            Error::Budget(_) => "budget",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
