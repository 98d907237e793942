use super::lgamma;
use crate::error::{domain, Error, Result};

const EPS: f64 = 1e-16;
const MAX_ITER: usize = 10_000;

/// Regularized upper incomplete gamma Q(a, x).
pub fn gamma_q(a: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return domain(format!("gamma_q needs a > 0, got {a}"));
    }
    if !(x >= 0.0) {
        return domain(format!("gamma_q needs x >= 0, got {x}"));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    if x == f64::INFINITY {
        return Ok(0.0);
    }
    let ln_pref = a * x.ln() - x - lgamma(a);
    if x < a + 1.0 {
        Ok((1.0 - lower_series(a, x, ln_pref)?).clamp(0.0, 1.0))
    } else {
        Ok(upper_fraction(a, x, ln_pref)?.clamp(0.0, 1.0))
    }
}

fn lower_series(a: f64, x: f64, ln_pref: f64) -> Result<f64> {
    let mut ap = a;
    let mut term = 1.0 / a;
    let mut sum = term;
    for _ in 0..MAX_ITER {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if term.abs() < sum.abs() * EPS {
            return Ok(sum * ln_pref.exp());
        }
    }
    Err(Error::NoConvergence("incomplete gamma series".into()))
}

// modified Lentz evaluation of the Legendre continued fraction
fn upper_fraction(a: f64, x: f64, ln_pref: f64) -> Result<f64> {
    let tiny = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            return Ok(ln_pref.exp() * h);
        }
    }
    Err(Error::NoConvergence("incomplete gamma continued fraction".into()))
}

/// Upper-tail probability of the chi-square law with `df` degrees of freedom.
pub fn chi2_sf(x: f64, df: f64) -> Result<f64> {
    if !(df > 0.0) || !df.is_finite() {
        return domain(format!("chi2_sf needs df > 0, got {df}"));
    }
    if !(x >= 0.0) {
        return domain(format!("chi2_sf needs x >= 0, got {x}"));
    }
    gamma_q(0.5 * df, 0.5 * x)
}
