//! Reference count laws: extended negative binomial and generalized Poisson.

use crate::countdist::FactorialMomentSequence;
use crate::error::{domain, Error, Result};
use crate::specfun::lgamma;

/// Negative binomial with size r > 0 and success probability p ∈ (0, 1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NegBinomParams {
    pub r: f64,
    pub p: f64,
}

impl NegBinomParams {
    pub fn new(r: f64, p: f64) -> Result<NegBinomParams> {
        if !(r > 0.0) || !r.is_finite() {
            return domain(format!("size r must be positive, got {r}"));
        }
        if !(p > 0.0 && p < 1.0) {
            return domain(format!("p must lie in (0, 1), got {p}"));
        }
        Ok(NegBinomParams { r, p })
    }

    /// Parametrization by size and mean, p = r / (r + mean).
    pub fn from_mean(r: f64, mean: f64) -> Result<NegBinomParams> {
        if !(mean > 0.0) {
            return domain(format!("mean must be positive, got {mean}"));
        }
        NegBinomParams::new(r, r / (r + mean))
    }

    pub fn mean(&self) -> f64 {
        self.r * (1.0 - self.p) / self.p
    }

    pub fn variance(&self) -> f64 {
        self.mean() / self.p
    }
}

/// Γ(r+x)/(Γ(r) x!) p^r (1−p)^x.
pub fn negbinom_pmf(p: &NegBinomParams, x: usize) -> f64 {
    let xf = x as f64;
    let l = lgamma(p.r + xf) - lgamma(p.r) - lgamma(xf + 1.0) + p.r * p.p.ln() + xf * (-p.p).ln_1p();
    l.exp()
}

/// Generalized Poisson with λ1 > 0 and λ2 ∈ [max(−1, −λ1/4), 1).
///
/// For λ2 < 0 the support is truncated at M, the largest x with
/// λ1 + λ2 x > 0, and the pmf renormalized over 0..=M.
#[derive(Clone, Debug, PartialEq)]
pub struct GenPoissonParams {
    pub lambda1: f64,
    pub lambda2: f64,
    m: Option<usize>,
    ln_norm: f64,
}

impl GenPoissonParams {
    pub fn new(lambda1: f64, lambda2: f64) -> Result<GenPoissonParams> {
        if !(lambda1 > 0.0) || !lambda1.is_finite() {
            return domain(format!("lambda1 must be positive, got {lambda1}"));
        }
        if !(lambda2 < 1.0) || !lambda2.is_finite() {
            return domain(format!("lambda2 must be below 1, got {lambda2}"));
        }
        if lambda2 >= 0.0 {
            return Ok(GenPoissonParams { lambda1, lambda2, m: None, ln_norm: 0.0 });
        }
        if lambda2 < -1.0 {
            return domain("lambda2 must be at least -1");
        }
        let mut m = (lambda1 / -lambda2).ceil() as usize;
        while m > 0 && lambda1 + lambda2 * m as f64 <= 0.0 {
            m -= 1;
        }
        if m < 4 {
            return domain(format!(
                "lambda2 = {lambda2} leaves a support of {} points; at least 5 are required",
                m + 1
            ));
        }
        let mut q = GenPoissonParams { lambda1, lambda2, m: Some(m), ln_norm: 0.0 };
        let z: f64 = (0..=m).map(|x| raw_ln_pmf(&q, x).exp()).sum();
        q.ln_norm = z.ln();
        Ok(q)
    }

    /// Largest support point M when λ2 < 0.
    pub fn support_max(&self) -> Option<usize> {
        self.m
    }

    /// Normalizing constant of the truncated pmf (1 for λ2 ≥ 0).
    pub fn truncation_mass(&self) -> f64 {
        self.ln_norm.exp()
    }
}

fn raw_ln_pmf(p: &GenPoissonParams, x: usize) -> f64 {
    let xf = x as f64;
    let th = p.lambda1 + p.lambda2 * xf;
    p.lambda1.ln() + (xf - 1.0) * th.ln() - th - lgamma(xf + 1.0)
}

/// λ1 (λ1 + λ2 x)^{x−1} e^{−(λ1+λ2 x)} / x!.
pub fn genpoisson_pmf(p: &GenPoissonParams, x: usize) -> f64 {
    if let Some(m) = p.m {
        if x > m {
            return 0.0;
        }
    }
    (raw_ln_pmf(p, x) - p.ln_norm).exp()
}

/// a_k = Σ_r (1/r!) λ1 (λ1 + λ2(r+k))^{r+k−1} e^{−(λ1+λ2(r+k))}, scaled by
/// k!/… through the falling factorial of the index; for λ2 < 0 the sum runs
/// over r ≤ M − k of the renormalized pmf and a_k = 0 for k > M.
pub fn genpoisson_factorial_moments(p: &GenPoissonParams, k_max: usize) -> Result<FactorialMomentSequence> {
    let mut a = vec![1.0];
    for k in 1..=k_max {
        // E[X(X−1)…(X−k+1)] = Σ_{r≥0} (r+k)!/r! · P(X = r+k)
        let lk = |r: usize| lgamma((r + k) as f64 + 1.0) - lgamma(r as f64 + 1.0);
        let v = match p.m {
            Some(m) => {
                if k > m {
                    0.0
                } else {
                    (0..=(m - k)).map(|r| (lk(r) + raw_ln_pmf(p, r + k) - p.ln_norm).exp()).sum()
                }
            }
            None => {
                let mut s = 0.0;
                let mut small = 0;
                let mut r = 0usize;
                loop {
                    let t = (lk(r) + raw_ln_pmf(p, r + k)).exp();
                    s += t;
                    if t < 1e-17 * s {
                        small += 1;
                        if small >= 5 && (r + k) as f64 > p.lambda1 / (1.0 - p.lambda2) {
                            break;
                        }
                    } else {
                        small = 0;
                    }
                    r += 1;
                    if r > 10_000_000 {
                        return Err(Error::NoConvergence(format!("factorial moment a_{k} sum")));
                    }
                }
                s
            }
        };
        if !v.is_finite() {
            return Err(Error::Overflow(format!("factorial moment a_{k} exceeds the double range")));
        }
        a.push(v);
    }
    FactorialMomentSequence::new(a)
}
