//! Random variates: one-sided stable laws, fPd counts by the renewal
//! algorithm, inversion sampling from pmf tables, and Monte Carlo moments.

use crate::error::{domain, Error, Result};
use crate::wpd::{self, WpdParams};
use rand::distr::Open01;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::f64::consts::PI;

/// Seeded uniform stream on the open interval (0, 1).
#[derive(Clone, Debug)]
pub struct RngStream {
    rng: ChaCha20Rng,
    seed: u64,
}

impl RngStream {
    pub fn new(seed: u64) -> RngStream {
        RngStream { rng: ChaCha20Rng::seed_from_u64(seed), seed }
    }

    /// Independent stream `index` derived from the same seed.
    pub fn substream(seed: u64, index: u64) -> RngStream {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(index);
        RngStream { rng, seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_uniform(&mut self) -> f64 {
        self.rng.sample(Open01)
    }

    pub fn next_exponential(&mut self) -> f64 {
        -self.next_uniform().ln()
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.rng.fill_bytes(dst)
    }
}

/// Counts drawn from one seed.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleBatch {
    pub values: Vec<u64>,
    pub n: usize,
    pub seed: u64,
}

/// Monte Carlo estimate with its standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub n: usize,
}

impl McEstimate {
    pub(crate) fn from_moments(sum: f64, sum_sq: f64, n: usize) -> McEstimate {
        let nf = n as f64;
        let mean = sum / nf;
        let var = if n > 1 { ((sum_sq - nf * mean * mean) / (nf - 1.0)).max(0.0) } else { 0.0 };
        McEstimate { estimate: mean, std_error: (var / nf).sqrt(), n }
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return domain(format!("alpha must lie in (0, 1], got {alpha}"));
    }
    Ok(())
}

/// ln S for the one-sided stable law with E e^{−tS} = e^{−t^α}, by the
/// Chambers–Mallows–Stuck / Kanter formula. α = 1 gives S = 1.
pub(crate) fn ln_stable(alpha: f64, u1: f64, u2: f64) -> f64 {
    if alpha == 1.0 {
        return 0.0;
    }
    let ia = 1.0 / alpha;
    let s1 = if u1 < 0.5 { (PI * u1).sin() } else { (PI * (1.0 - u1)).sin() };
    (alpha * PI * u1).sin().ln() + (ia - 1.0) * ((1.0 - alpha) * PI * u1).sin().ln()
        - ia * s1.ln()
        - (ia - 1.0) * (-u2.ln()).ln()
}

/// One draw of the one-sided α-stable variable S.
pub fn sample_stable(alpha: f64, rng: &mut RngStream) -> Result<f64> {
    check_alpha(alpha)?;
    let u1 = rng.next_uniform();
    let u2 = rng.next_uniform();
    Ok(ln_stable(alpha, u1, u2).exp())
}

const RENEWAL_CAP: u64 = 10_000_000;

fn fpd_variate(alpha: f64, mu: f64, rng: &mut RngStream) -> Result<u64> {
    let mut x = 0u64;
    let mut t = 0.0;
    loop {
        let v = rng.next_exponential() / mu;
        let s = if alpha == 1.0 { 1.0 } else { ln_stable(alpha, rng.next_uniform(), rng.next_uniform()).exp() };
        t += v.powf(1.0 / alpha) * s;
        if t > 1.0 {
            return Ok(x);
        }
        x += 1;
        if x >= RENEWAL_CAP {
            return Err(Error::Budget(format!("renewal loop passed {RENEWAL_CAP} events")));
        }
    }
}

/// `n` fPd(α, μ) counts from the renewal process observed at time 1.
pub fn sample_fpd(alpha: f64, mu: f64, n: usize, rng: &mut RngStream) -> Result<SampleBatch> {
    check_alpha(alpha)?;
    if !(mu > 0.0) || !mu.is_finite() {
        return domain(format!("mu must be positive, got {mu}"));
    }
    let values = (0..n).map(|_| fpd_variate(alpha, mu, rng)).collect::<Result<Vec<_>>>()?;
    Ok(SampleBatch { values, n, seed: rng.seed() })
}

/// Inverse-CDF sampler over a finite pmf table.
#[derive(Clone, Debug)]
pub struct TableSampler {
    cdf: Vec<f64>,
}

impl TableSampler {
    pub fn new(pmf: &[f64]) -> Result<TableSampler> {
        if pmf.is_empty() || pmf.iter().any(|p| !(p.is_finite() && *p >= 0.0)) {
            return domain("pmf table must be non-empty with finite non-negative entries");
        }
        let mut acc = 0.0;
        let mut cdf: Vec<f64> = pmf
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect();
        let total = acc;
        if !(total > 0.0) {
            return domain("pmf table has zero mass");
        }
        for c in cdf.iter_mut() {
            *c /= total;
        }
        Ok(TableSampler { cdf })
    }

    pub fn draw(&self, rng: &mut RngStream) -> u64 {
        let u = rng.next_uniform();
        self.cdf.partition_point(|&c| c < u).min(self.cdf.len() - 1) as u64
    }

    pub fn sample(&self, n: usize, rng: &mut RngStream) -> SampleBatch {
        let values = (0..n).map(|_| self.draw(rng)).collect();
        SampleBatch { values, n, seed: rng.seed() }
    }
}

const TABLE_TAIL: f64 = 1e-12;
const TABLE_BUDGET: usize = 1_000_000;

/// pmf table 0..=X with Σ pmf > 1 − 1e−12, built from a pointwise pmf.
pub fn pmf_table_until<F>(mut pmf: F) -> Result<Vec<f64>>
where
    F: FnMut(usize) -> Result<f64>,
{
    let mut out = Vec::new();
    let mut acc = 0.0;
    while acc <= 1.0 - TABLE_TAIL {
        if out.len() >= TABLE_BUDGET {
            return Err(Error::Budget(format!("pmf table passed {TABLE_BUDGET} entries")));
        }
        let p = pmf(out.len())?;
        acc += p;
        out.push(p);
    }
    Ok(out)
}

/// `n` WPD counts by inversion over the recursively built pmf.
pub fn sample_wpd(p: &WpdParams, n: usize, rng: &mut RngStream) -> Result<SampleBatch> {
    let table = wpd::wpd_pmf_until(p, TABLE_TAIL, TABLE_BUDGET)?;
    Ok(TableSampler::new(&table)?.sample(n, rng))
}

/// Monte Carlo estimate of E X^k for X ~ fPd(α, μ).
pub fn mc_moment(alpha: f64, mu: f64, k: u32, n: usize, rng: &mut RngStream) -> Result<McEstimate> {
    check_alpha(alpha)?;
    if n == 0 {
        return domain("mc_moment needs n >= 1");
    }
    if k == 0 {
        return Ok(McEstimate { estimate: 1.0, std_error: 0.0, n });
    }
    let batch = sample_fpd(alpha, mu, n, rng)?;
    let (mut s, mut s2) = (0.0, 0.0);
    for &v in &batch.values {
        let y = (v as f64).powi(k as i32);
        s += y;
        s2 += y * y;
    }
    Ok(McEstimate::from_moments(s, s2, n))
}
