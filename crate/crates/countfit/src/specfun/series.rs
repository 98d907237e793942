//! Summation driver shared by the Mittag–Leffler and Wright series.

use super::dd::Dd;
use super::SeriesValue;
use crate::error::{Error, Result};

pub(crate) const REL_TOL: f64 = 1e-15;
pub(crate) const CANCELLATION_GUARD: f64 = 1e12;
const SMALL_RUN: usize = 5;
const MAX_TERMS: usize = 20_000;
const LN_OVERFLOW: f64 = 700.0;

/// One series term: log-magnitude, sign (0 for an exact zero) and the
/// log of an envelope bounding |term| whose ratio is used for the tail.
pub(crate) struct Term {
    pub ln_mag: Dd,
    pub sign: f64,
    pub ln_env: f64,
}

pub(crate) fn sum<F>(start: usize, mut term: F) -> Result<SeriesValue>
where
    F: FnMut(usize) -> Term,
{
    let mut acc = Dd::ZERO;
    let mut max_abs = 0.0f64;
    let mut run = 0usize;
    let mut prev_env = f64::NAN;
    let mut ratios: Vec<f64> = Vec::with_capacity(SMALL_RUN);
    for (n, j) in (start..start + MAX_TERMS).enumerate() {
        let t = term(j);
        if t.ln_env > LN_OVERFLOW {
            return Err(Error::Divergence);
        }
        if t.sign != 0.0 {
            let v = t.ln_mag.exp();
            let v = if t.sign < 0.0 { -v } else { v };
            max_abs = max_abs.max(v.hi.abs());
            acc = acc + v;
        }
        let env = t.ln_env.exp();
        let ratio = env / prev_env;
        prev_env = env;
        if ratios.len() == SMALL_RUN {
            ratios.remove(0);
        }
        ratios.push(ratio);

        if env < REL_TOL * acc.hi.abs() {
            run += 1;
        } else {
            run = 0;
        }
        let certified = ratios.len() == SMALL_RUN
            && ratios.iter().all(|r| r.is_finite() && *r < 1.0)
            && ratios.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-9));
        if run >= SMALL_RUN && certified {
            let rho = *ratios.last().unwrap();
            let tail = env * rho / (1.0 - rho);
            let value = acc.to_f64();
            let ratio = if value == 0.0 { f64::INFINITY } else { max_abs / value.abs() };
            if ratio > CANCELLATION_GUARD {
                return Err(Error::Cancellation { ratio });
            }
            return Ok(SeriesValue { value, terms_used: n + 1, est_truncation_error: tail });
        }
    }
    Err(Error::NoConvergence(format!("series not certified within {MAX_TERMS} terms")))
}
