//! Count-distribution toolkit: generalized fractional Poisson laws, the
//! gamma-ratio weighted Poisson family, baselines, sampling and fitting.

pub mod baselines;
pub mod countdist;
pub mod error;
pub mod inference;
pub(crate) mod quadrature;
pub mod sampling;
pub mod specfun;
pub mod wpd;

pub use error::{Error, Result};
