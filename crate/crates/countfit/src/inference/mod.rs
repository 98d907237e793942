//! Count data, model likelihoods, maximum-likelihood fitting, χ²
//! goodness of fit and multi-model comparison.

mod fit;
mod gof;

pub use fit::{fit_grid, fit_simplex, Grid, SIMPLEX_MAX_EVALS, SIMPLEX_TOL};
pub use gof::{compare, gof_chisq, gof_chisq_with, Cell, CompareRow, GofResult, Pooling};

use crate::baselines::{genpoisson_factorial_moments, genpoisson_pmf, negbinom_pmf, GenPoissonParams, NegBinomParams};
use crate::countdist::{
    gfpd_factorial_moments, gfpd_pmf_support, gfpd_pmf_table, FactorialMomentSequence, GfpdParams, SummaryStats,
};
use crate::sampling::{sample_fpd, sample_wpd, RngStream, SampleBatch, TableSampler};
use crate::error::{domain, Error, Result};
use crate::quadrature::{Mixture, Steps};
use crate::specfun::lgamma;
use crate::wpd::{self, make_special_case, SpecialCaseTag};
use std::collections::BTreeMap;
use std::fmt;

/// Histogram of observed counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountData {
    histogram: BTreeMap<u64, u64>,
    n_total: u64,
}

impl CountData {
    /// From raw observations.
    pub fn from_values(values: &[u64]) -> Result<CountData> {
        if values.is_empty() {
            return domain("count data is empty");
        }
        let mut histogram = BTreeMap::new();
        for &v in values {
            *histogram.entry(v).or_insert(0) += 1;
        }
        Ok(CountData { histogram, n_total: values.len() as u64 })
    }

    /// From (value, frequency) pairs. Repeated values are added up and
    /// zero frequencies dropped.
    pub fn from_histogram<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Result<CountData> {
        let mut histogram = BTreeMap::new();
        let mut n_total = 0u64;
        for (v, f) in pairs {
            if f == 0 {
                continue;
            }
            *histogram.entry(v).or_insert(0) += f;
            n_total += f;
        }
        if n_total == 0 {
            return domain("count data is empty");
        }
        Ok(CountData { histogram, n_total })
    }

    pub fn histogram(&self) -> &BTreeMap<u64, u64> {
        &self.histogram
    }

    pub fn n_total(&self) -> u64 {
        self.n_total
    }

    pub fn max_value(&self) -> u64 {
        *self.histogram.keys().next_back().unwrap_or(&0)
    }

    pub fn mean(&self) -> f64 {
        self.histogram.iter().map(|(&v, &f)| v as f64 * f as f64).sum::<f64>() / self.n_total as f64
    }

    /// Sample variance with divisor n − 1 (0 for a single observation).
    pub fn variance(&self) -> f64 {
        let n = self.n_total as f64;
        if self.n_total < 2 {
            return 0.0;
        }
        let m = self.mean();
        self.histogram.iter().map(|(&v, &f)| f as f64 * (v as f64 - m).powi(2)).sum::<f64>() / (n - 1.0)
    }
}

/// Model families available for fitting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    /// fPd(α, μ) with α ∈ [0, 1]; α = 0 is the geometric limit.
    Fpd,
    /// gfPd(α, β, δ, μ).
    Gfpd,
    /// Negative binomial in (size, mean).
    NegBinom,
    /// Generalized Poisson (λ1, λ2).
    GenPoisson,
    /// A tagged member of the weighted Poisson family.
    Wpd(SpecialCaseTag),
}

/// Admissible range of one parameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Bound {
    Positive,
    Interval(f64, f64),
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Fpd => "fpd",
            Model::Gfpd => "gfpd",
            Model::NegBinom => "negbinom",
            Model::GenPoisson => "genpoisson",
            Model::Wpd(t) => t.name(),
        }
    }

    pub fn from_name(s: &str) -> Option<Model> {
        match s.to_ascii_lowercase().as_str() {
            "fpd" => Some(Model::Fpd),
            "gfpd" => Some(Model::Gfpd),
            "negbinom" | "nb" => Some(Model::NegBinom),
            "genpoisson" | "gp" => Some(Model::GenPoisson),
            _ => SpecialCaseTag::from_name(s).map(Model::Wpd),
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Model::Fpd => &["alpha", "mu"],
            Model::Gfpd => &["alpha", "beta", "delta", "mu"],
            Model::NegBinom => &["size", "mean"],
            Model::GenPoisson => &["lambda1", "lambda2"],
            Model::Wpd(t) => t.free_params(),
        }
    }

    pub fn n_params(self) -> usize {
        self.param_names().len()
    }

    pub fn bounds(self) -> Vec<Bound> {
        match self {
            Model::Fpd => vec![Bound::Interval(0.0, 1.0), Bound::Positive],
            Model::Gfpd => vec![Bound::Interval(1e-6, 1.0), Bound::Interval(1e-6, 1.0), Bound::Positive, Bound::Positive],
            Model::NegBinom => vec![Bound::Positive, Bound::Positive],
            Model::GenPoisson => vec![Bound::Positive, Bound::Interval(-1.0, 1.0)],
            Model::Wpd(t) => vec![Bound::Positive; t.free_params().len()],
        }
    }

    /// Moment-based starting point for the simplex.
    pub fn default_init(self, data: &CountData) -> Vec<f64> {
        let m = data.mean().max(1e-3);
        let v = data.variance().max(1e-3);
        match self {
            Model::Fpd => vec![0.8, m * lgamma(1.8).exp()],
            Model::Gfpd => {
                let (a, b, d) = (0.8, 0.9, 1.0);
                vec![a, b, d, m * (lgamma(a + b) - lgamma(b)).exp() / d]
            }
            Model::NegBinom => {
                let size = if v > m * (1.0 + 1e-3) { m * m / (v - m) } else { 100.0 };
                vec![size.clamp(1e-2, 1e4), m]
            }
            Model::GenPoisson => {
                let l2 = (1.0 - (m / v).sqrt()).clamp(-0.2, 0.9);
                vec![m * (1.0 - l2), l2]
            }
            Model::Wpd(t) => t
                .free_params()
                .iter()
                .map(|n| match *n {
                    "lambda" => m,
                    "gamma" if t == SpecialCaseTag::ModelII2Param => m,
                    _ => 1.0,
                })
                .collect(),
        }
    }

    /// Default fitting route used by `compare`: the grid for fPd, the
    /// simplex otherwise.
    pub fn prefers_grid(self) -> bool {
        self == Model::Fpd
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A model together with a parameter vector in `param_names` order.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelParams {
    pub model: Model,
    pub params: Vec<f64>,
}

enum Law {
    Gfpd(GfpdParams),
    NegBinom(NegBinomParams),
    GenPoisson(GenPoissonParams),
    Wpd(wpd::WpdParams),
}

impl ModelParams {
    pub fn new(model: Model, params: Vec<f64>) -> Result<ModelParams> {
        let mp = ModelParams { model, params };
        mp.law()?;
        Ok(mp)
    }

    fn law(&self) -> Result<Law> {
        let want = self.model.n_params();
        if self.params.len() != want {
            return domain(format!("{} takes {want} parameters, got {}", self.model, self.params.len()));
        }
        let p = &self.params;
        Ok(match self.model {
            Model::Fpd => {
                if p[0] == 0.0 {
                    Law::Gfpd(GfpdParams::geometric(p[1])?)
                } else {
                    Law::Gfpd(GfpdParams::fpd(p[0], p[1])?)
                }
            }
            Model::Gfpd => Law::Gfpd(GfpdParams::new(p[0], p[1], p[2], p[3])?),
            Model::NegBinom => Law::NegBinom(NegBinomParams::from_mean(p[0], p[1])?),
            Model::GenPoisson => Law::GenPoisson(GenPoissonParams::new(p[0], p[1])?),
            Model::Wpd(t) => Law::Wpd(make_special_case(t, p)?),
        })
    }

    /// pmf values for x = 0..=x_max.
    pub fn pmf_table(&self, x_max: usize) -> Result<Vec<f64>> {
        Ok(match self.law()? {
            Law::Gfpd(g) => gfpd_pmf_table(&g, x_max)?,
            Law::NegBinom(nb) => (0..=x_max).map(|x| negbinom_pmf(&nb, x)).collect(),
            Law::GenPoisson(gp) => (0..=x_max).map(|x| genpoisson_pmf(&gp, x)).collect(),
            Law::Wpd(w) => {
                let ln_eta = wpd::eta(&w)?.ln_value;
                (0..=x_max).map(|x| (wpd::ln_term(&w, x) - ln_eta).exp()).collect()
            }
        })
    }

    /// pmf from 0 until it stays below 1e−14 for 10 consecutive values past
    /// the mean.
    pub fn pmf_support(&self) -> Result<Vec<f64>> {
        if let Law::Gfpd(g) = self.law()? {
            return gfpd_pmf_support(&g);
        }
        let mean = self.factorial_moments(1)?.get(1);
        let mut x_max = ((mean * 4.0) as usize).max(32);
        loop {
            let t = self.pmf_table(x_max)?;
            let mut run = 0;
            for (x, v) in t.iter().enumerate() {
                if (x as f64) > mean && *v < 1e-14 {
                    run += 1;
                    if run >= 10 {
                        return Ok(t[..=x].to_vec());
                    }
                } else {
                    run = 0;
                }
            }
            if x_max >= 1_000_000 {
                return Err(Error::Budget(format!("pmf tail still above 1e-14 at x = {x_max}")));
            }
            x_max *= 2;
        }
    }

    /// Factorial moments a_0..=a_k.
    pub fn factorial_moments(&self, k: usize) -> Result<FactorialMomentSequence> {
        match self.law()? {
            Law::Gfpd(g) => gfpd_factorial_moments(&g, k),
            Law::NegBinom(nb) => {
                let odds = (1.0 - nb.p) / nb.p;
                let a = (0..=k)
                    .map(|j| (lgamma(nb.r + j as f64) - lgamma(nb.r) + j as f64 * odds.ln()).exp())
                    .collect();
                FactorialMomentSequence::new(a)
            }
            Law::GenPoisson(gp) => genpoisson_factorial_moments(&gp, k),
            Law::Wpd(w) => wpd::wpd_factorial_moments(&w, k),
        }
    }

    /// Mean, variance, skewness and Fisher index.
    pub fn summary(&self) -> Result<SummaryStats> {
        SummaryStats::from_factorial(&self.factorial_moments(3)?)
    }

    /// `n` draws: the renewal algorithm for the fPd, inversion over the pmf
    /// support otherwise.
    pub fn sample(&self, n: usize, rng: &mut RngStream) -> Result<SampleBatch> {
        match self.law()? {
            Law::Gfpd(g) if g.is_fpd() && !g.is_geometric() => sample_fpd(g.alpha(), g.mu(), n, rng),
            Law::Wpd(w) => sample_wpd(&w, n, rng),
            _ => Ok(TableSampler::new(&self.pmf_support()?)?.sample(n, rng)),
        }
    }

    /// Cheaper pmf table for use inside optimizers: gfPd values come from
    /// the coarser mixture rule, everything else is exact.
    /// `lam_ref` is the largest rate the table has to resolve well.
    pub(crate) fn pmf_table_fast(&self, x_max: usize, lam_ref: f64) -> Result<Vec<f64>> {
        match self.law()? {
            Law::Gfpd(g) if !g.is_geometric() && g.alpha() < 1.0 => {
                let m = fast_mixture(g.alpha(), g.beta(), g.delta(), lam_ref)?;
                Ok(m.pmf_table(g.mu(), x_max))
            }
            _ => self.pmf_table(x_max),
        }
    }
}

/// Rate scale the fitting tables are sized for: the bulk of the data.
pub(crate) fn fit_lam_ref(data: &CountData) -> f64 {
    let m = data.mean();
    (data.max_value() as f64).min(m + 10.0 * m.sqrt() + 10.0).max(m)
}

pub(crate) fn fast_mixture(alpha: f64, beta: f64, delta: f64, lam_ref: f64) -> Result<Mixture> {
    Mixture::gfpd(alpha, beta, delta, Steps::FIT.scaled(lam_ref, alpha, alpha * delta))
}

pub(crate) fn loglik_from_table(table: &[f64], data: &CountData) -> Result<f64> {
    let mut s = 0.0;
    for (&v, &f) in data.histogram() {
        let p = table[v as usize];
        if !p.is_finite() || p < 0.0 {
            return Err(Error::NoConvergence(format!("pmf at x = {v} evaluated to {p}")));
        }
        s += f as f64 * p.ln();
    }
    Ok(s)
}

/// Σ_x freq(x) ln pmf(x); −∞ when an observed value has zero probability.
pub fn loglik(mp: &ModelParams, data: &CountData) -> Result<f64> {
    let x_max = data.max_value() as usize;
    let table = mp.pmf_table(x_max).map_err(|e| annotate(e, x_max))?;
    loglik_from_table(&table, data)
}

pub(crate) fn loglik_fast(mp: &ModelParams, data: &CountData) -> Result<f64> {
    let table = mp.pmf_table_fast(data.max_value() as usize, fit_lam_ref(data))?;
    loglik_from_table(&table, data)
}

fn annotate(e: Error, x_max: usize) -> Error {
    match e {
        Error::Domain(m) => Error::Domain(m),
        Error::Budget(m) => Error::Budget(format!("{m} (pmf over 0..={x_max})")),
        Error::NoConvergence(m) => Error::NoConvergence(format!("{m} (pmf over 0..={x_max})")),
        other => other,
    }
}

/// Fitted model with its likelihood and χ² summary.
#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    pub model: Model,
    pub params: Vec<f64>,
    pub loglik: f64,
    pub chi2: f64,
    pub df: usize,
    pub p_value: f64,
    pub converged: bool,
    pub evaluations: usize,
}

impl FitResult {
    pub fn param_names(&self) -> &'static [&'static str] {
        self.model.param_names()
    }

    pub fn model_params(&self) -> ModelParams {
        ModelParams { model: self.model, params: self.params.clone() }
    }

    pub(crate) fn finish(model: Model, params: Vec<f64>, data: &CountData, converged: bool, evaluations: usize) -> Result<FitResult> {
        let mp = ModelParams::new(model, params)?;
        let ll = loglik(&mp, data)?;
        let g = gof_chisq(&mp, data)?;
        Ok(FitResult {
            model,
            params: mp.params,
            loglik: ll,
            chi2: g.chi2,
            df: g.df,
            p_value: g.p_value,
            converged,
            evaluations,
        })
    }
}
