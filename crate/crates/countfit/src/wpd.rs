//! Weighted Poisson distributions with the gamma-ratio weight
//! w(k) = Γ(k+γ) / Γ(αk+β)^ν, their normalizer, recursions, factorial
//! moments and dispersion criteria.

use crate::countdist::FactorialMomentSequence;
use crate::error::{domain, Error, Result};
use crate::specfun::dd::{self, Dd};
use crate::specfun::lgamma;
use std::fmt;

/// Named restrictions of the weight family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialCaseTag {
    Poisson,
    ComPoisson,
    HyperPoisson,
    AltMittagLeffler,
    FractionalComPoisson,
    AltGeneralizedMl,
    ModelI,
    ModelI2Param,
    ModelII,
    ModelII2Param,
}

impl SpecialCaseTag {
    pub const ALL: [SpecialCaseTag; 10] = [
        SpecialCaseTag::Poisson,
        SpecialCaseTag::ComPoisson,
        SpecialCaseTag::HyperPoisson,
        SpecialCaseTag::AltMittagLeffler,
        SpecialCaseTag::FractionalComPoisson,
        SpecialCaseTag::AltGeneralizedMl,
        SpecialCaseTag::ModelI,
        SpecialCaseTag::ModelI2Param,
        SpecialCaseTag::ModelII,
        SpecialCaseTag::ModelII2Param,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpecialCaseTag::Poisson => "poisson",
            SpecialCaseTag::ComPoisson => "com_poisson",
            SpecialCaseTag::HyperPoisson => "hyper_poisson",
            SpecialCaseTag::AltMittagLeffler => "alt_mittag_leffler",
            SpecialCaseTag::FractionalComPoisson => "fractional_com_poisson",
            SpecialCaseTag::AltGeneralizedMl => "alt_generalized_ml",
            SpecialCaseTag::ModelI => "model_I",
            SpecialCaseTag::ModelI2Param => "model_I_2param",
            SpecialCaseTag::ModelII => "model_II",
            SpecialCaseTag::ModelII2Param => "model_II_2param",
        }
    }

    pub fn from_name(s: &str) -> Option<SpecialCaseTag> {
        SpecialCaseTag::ALL.iter().copied().find(|t| t.name().eq_ignore_ascii_case(s))
    }

    /// Names of the free parameters, in the order `make_special_case` takes them.
    pub fn free_params(self) -> &'static [&'static str] {
        match self {
            SpecialCaseTag::Poisson => &["lambda"],
            SpecialCaseTag::ComPoisson => &["lambda", "nu"],
            SpecialCaseTag::HyperPoisson => &["lambda", "beta"],
            SpecialCaseTag::AltMittagLeffler => &["lambda", "alpha", "beta"],
            SpecialCaseTag::FractionalComPoisson => &["lambda", "alpha", "beta", "nu"],
            SpecialCaseTag::AltGeneralizedMl => &["lambda", "alpha", "beta", "gamma"],
            SpecialCaseTag::ModelI => &["lambda", "nu", "beta"],
            SpecialCaseTag::ModelI2Param => &["lambda", "beta"],
            SpecialCaseTag::ModelII => &["lambda", "gamma", "beta"],
            SpecialCaseTag::ModelII2Param => &["gamma", "beta"],
        }
    }

    /// Free parameter values of `p` under this tag.
    pub fn free_values(self, p: &WpdParams) -> Vec<f64> {
        self.free_params()
            .iter()
            .map(|n| match *n {
                "lambda" => p.lambda,
                "alpha" => p.alpha,
                "beta" => p.beta,
                "gamma" => p.gamma,
                _ => p.nu,
            })
            .collect()
    }
}

impl fmt::Display for SpecialCaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters (α, β, γ, ν, λ) of the gamma-ratio weighted Poisson law.
///
/// β = 0 is the Model I limit γ = β → 0 with ν ≥ 1, where
/// w(k) = Γ(k)^{1−ν} for k ≥ 1 and w(0) = 1 if ν = 1, 0 otherwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WpdParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub nu: f64,
    pub lambda: f64,
    pub tag: Option<SpecialCaseTag>,
}

impl WpdParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64, nu: f64, lambda: f64) -> Result<WpdParams> {
        let p = WpdParams { alpha, beta, gamma, nu, lambda, tag: None };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let v = [self.alpha, self.beta, self.gamma, self.nu, self.lambda];
        if v.iter().any(|x| !x.is_finite()) {
            return domain("weighted Poisson parameters must be finite");
        }
        if self.alpha < 0.0 || self.beta < 0.0 || self.nu < 0.0 {
            return domain("alpha, beta and nu must be non-negative");
        }
        if !(self.lambda > 0.0) {
            return domain(format!("lambda must be positive, got {}", self.lambda));
        }
        if self.beta == 0.0 {
            if !(self.is_model_i_limit() && self.nu >= 1.0) {
                return domain("beta = 0 is only admitted as the Model I limit gamma = beta -> 0 with alpha = 1 and nu >= 1");
            }
        } else if !(self.gamma > 0.0) {
            return domain(format!("gamma must be positive, got {}", self.gamma));
        }
        Ok(())
    }

    fn is_model_i_limit(&self) -> bool {
        self.beta == 0.0 && self.gamma == 0.0 && self.alpha == 1.0
    }

    pub fn with_lambda(mut self, lambda: f64) -> WpdParams {
        self.lambda = lambda;
        self
    }

    /// Family with weights shifted by r: w_r(k) = w(k + r).
    fn shifted(&self, r: usize) -> WpdParams {
        let rf = r as f64;
        WpdParams { gamma: self.gamma + rf, beta: self.beta + self.alpha * rf, tag: None, ..*self }
    }
}

/// Instantiates a tagged special case from its free parameters, given in
/// the order of [`SpecialCaseTag::free_params`].
pub fn make_special_case(tag: SpecialCaseTag, free: &[f64]) -> Result<WpdParams> {
    let want = tag.free_params().len();
    if free.len() != want {
        return domain(format!("{tag} takes {want} parameters, got {}", free.len()));
    }
    let f = free;
    let (alpha, beta, gamma, nu, lambda) = match tag {
        SpecialCaseTag::Poisson => (1.0, 1.0, 1.0, 1.0, f[0]),
        SpecialCaseTag::ComPoisson => (1.0, 1.0, 1.0, f[1], f[0]),
        SpecialCaseTag::HyperPoisson => (1.0, f[1], 1.0, 1.0, f[0]),
        SpecialCaseTag::AltMittagLeffler => (f[1], f[2], 1.0, 1.0, f[0]),
        SpecialCaseTag::FractionalComPoisson => (f[1], f[2], 1.0, f[3], f[0]),
        SpecialCaseTag::AltGeneralizedMl => (f[1], f[2], f[3], 1.0, f[0]),
        SpecialCaseTag::ModelI => (1.0, f[2], f[2], f[1], f[0]),
        SpecialCaseTag::ModelI2Param => (1.0, f[1], f[1], f[1], f[0]),
        SpecialCaseTag::ModelII => (1.0, f[2], f[1], 1.0, f[0]),
        SpecialCaseTag::ModelII2Param => (1.0, f[1], f[0], 1.0, 1.0),
    };
    if matches!(tag, SpecialCaseTag::ModelI2Param) && !(beta > 0.0) {
        return domain("model_I_2param needs beta > 0");
    }
    let mut p = WpdParams::new(alpha, beta, gamma, nu, lambda)?;
    p.tag = Some(tag);
    Ok(p)
}

/// lnΓ(x+a) − lnΓ(x) for x > 0, a ≥ 0, accurate for large x.
pub(crate) fn ln_gamma_ratio(x: f64, a: f64) -> f64 {
    if a == 0.0 {
        return 0.0;
    }
    if x < 1e4 {
        return lgamma(x + a) - lgamma(x);
    }
    let c = |z: f64| {
        let z2 = 1.0 / (z * z);
        (1.0 / 12.0 - z2 * (1.0 / 360.0 - z2 / 1260.0)) / z
    };
    (x - 0.5) * (a / x).ln_1p() + a * (x + a).ln() - a + c(x + a) - c(x)
}

/// ln w(k).
pub fn ln_weight(p: &WpdParams, k: usize) -> f64 {
    let kf = k as f64;
    if p.beta == 0.0 {
        return if k == 0 {
            if p.nu == 1.0 { 0.0 } else { f64::NEG_INFINITY }
        } else {
            (1.0 - p.nu) * lgamma(kf)
        };
    }
    if kf > 1e5 {
        let g = dd::ln_gamma(Dd::new(kf + p.gamma)) - dd::ln_gamma(Dd::prod(p.alpha, kf).add_f64(p.beta)).mul_f64(p.nu);
        return g.to_f64();
    }
    let b = p.alpha * kf + p.beta;
    lgamma(kf + p.gamma) - if p.nu == 0.0 { 0.0 } else { p.nu * lgamma(b) }
}

/// w(k) = Γ(k+γ) / Γ(αk+β)^ν.
pub fn weight(p: &WpdParams, k: usize) -> Result<f64> {
    p.validate()?;
    let l = ln_weight(p, k);
    if l > 709.0 {
        return Err(Error::Overflow(format!("w({k}) exceeds the double range")));
    }
    Ok(l.exp())
}

/// ln(λ^k w(k) / k!).
pub(crate) fn ln_term(p: &WpdParams, k: usize) -> f64 {
    let kf = k as f64;
    if kf > 1e5 {
        if p.beta == 0.0 {
            let l = Dd::new(p.lambda).ln().mul_f64(kf) - dd::ln_gamma(Dd::new(kf + 1.0))
                + dd::ln_gamma(Dd::new(kf)).mul_f64(1.0 - p.nu);
            return l.to_f64();
        }
        let l = Dd::new(p.lambda).ln().mul_f64(kf) - dd::ln_gamma(Dd::new(kf + 1.0)) + dd::ln_gamma(Dd::new(kf + p.gamma))
            - dd::ln_gamma(Dd::prod(p.alpha, kf).add_f64(p.beta)).mul_f64(p.nu);
        return l.to_f64();
    }
    kf * p.lambda.ln() - lgamma(kf + 1.0) + ln_weight(p, k)
}

/// ln of the successive-term ratio t_{k+1}/t_k (k ≥ 1 in the β = 0 limit).
pub(crate) fn ln_ratio(p: &WpdParams, k: usize) -> f64 {
    if p.beta == 0.0 && k == 0 {
        return p.lambda.ln();
    }
    let kf = k as f64;
    let h = ((kf + p.gamma) / (kf + 1.0)).ln();
    let g = if p.nu == 0.0 || p.alpha == 0.0 { 0.0 } else { p.nu * ln_gamma_ratio(p.alpha * kf + p.beta, p.alpha) };
    p.lambda.ln() + h - g
}

/// Upper bound on ln t_{i+1}/t_i for every i ≥ k.
fn ln_ratio_upper(p: &WpdParams, k: usize) -> f64 {
    let k = if p.beta == 0.0 { k.max(1) } else { k };
    let kf = k as f64;
    let h = ((kf + p.gamma) / (kf + 1.0)).ln().max(0.0);
    let g = if p.nu == 0.0 || p.alpha == 0.0 { 0.0 } else { p.nu * ln_gamma_ratio(p.alpha * kf + p.beta, p.alpha) };
    p.lambda.ln() + h - g
}

/// Lower bound on ln t_{i+1}/t_i for i ∈ [k0, k1).
fn ln_ratio_lower(p: &WpdParams, k0: usize, k1: usize) -> f64 {
    let h = ((k0 as f64 + p.gamma) / (k0 as f64 + 1.0)).ln().min(0.0);
    let g = if p.nu == 0.0 || p.alpha == 0.0 {
        0.0
    } else {
        p.nu * ln_gamma_ratio(p.alpha * k1 as f64 + p.beta, p.alpha)
    };
    p.lambda.ln() + h - g
}

/// Normalizer η = Σ λ^k w(k)/k! with a certified truncation bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EtaValue {
    /// η, or +∞ when it exceeds the double range (see `ln_value`)
    pub value: f64,
    pub ln_value: f64,
    /// first index not summed
    pub k_trunc: usize,
    /// bound on the omitted mass Σ_{k ≥ k_trunc} t_k plus any skipped head
    pub remainder_bound: f64,
    /// `remainder_bound / value`
    pub rel_remainder_bound: f64,
}

const NEGLIGIBLE: f64 = 1e-17;
const DIRECT_PREFIX: usize = 1_000;
const DIRECT_LIMIT: usize = 2_000_000;
const TERM_BUDGET: usize = 10_000_000;
const SAFETY: f64 = 1.0 + 1e-9;

/// Running Σ exp(l_k) kept as exp(scale)·s.
#[derive(Clone, Copy, Debug)]
struct LogSum {
    scale: f64,
    s: f64,
    c: f64,
}

impl LogSum {
    fn new() -> LogSum {
        LogSum { scale: f64::NEG_INFINITY, s: 0.0, c: 0.0 }
    }

    fn add(&mut self, l: f64) {
        if l == f64::NEG_INFINITY {
            return;
        }
        if l > self.scale {
            let f = (self.scale - l).exp();
            self.s *= f;
            self.c *= f;
            self.scale = l;
        }
        // Neumaier
        let v = (l - self.scale).exp();
        let t = self.s + v;
        if self.s.abs() >= v.abs() {
            self.c += (self.s - t) + v;
        } else {
            self.c += (v - t) + self.s;
        }
        self.s = t;
    }

    fn ln(&self) -> f64 {
        self.scale + (self.s + self.c).ln()
    }
}

/// ln of t/(1 − ρ) given ln t and ln ρ < 0.
fn ln_geometric(lt: f64, lrho: f64) -> f64 {
    lt - (-(lrho * SAFETY).exp_m1()).ln()
}

/// Normalizer η^{γ,ν}_{α,β}(λ).
pub fn eta(p: &WpdParams) -> Result<EtaValue> {
    p.validate()?;
    let start = if p.beta == 0.0 && p.nu != 1.0 { 1 } else { 0 };
    let mut sum = LogSum::new();
    let mut lt = ln_term(p, start);
    let mut k = start;
    let mut extra = LogSum::new();
    let mut walked = 0usize;

    // far peak: locate the first index whose ratio bound drops below 1
    let far = if ln_ratio_upper(p, DIRECT_PREFIX) >= 0.0 {
        let cross = first_ratio_below_one(p, DIRECT_PREFIX)?;
        (cross > DIRECT_LIMIT).then_some(cross)
    } else {
        None
    };

    if let Some(peak) = far {
        // head [start, DIRECT_PREFIX) summed directly
        while k < DIRECT_PREFIX {
            sum.add(lt);
            lt += ln_ratio(p, k);
            k += 1;
        }
        let slope = curvature(p, peak);
        let width = (12.0 / slope.sqrt()) as usize + 1000;
        let lo = peak.saturating_sub(width).max(DIRECT_PREFIX);
        // skipped block [DIRECT_PREFIX, lo) bounded by halving intervals on
        // which the terms increase geometrically
        let mut b = lo;
        while b > DIRECT_PREFIX {
            let a = (b / 2).max(DIRECT_PREFIX);
            let lr = ln_ratio_lower(p, a, b);
            if lr <= 0.0 {
                return Err(Error::Budget(format!(
                    "normalizer needs direct summation over [{a}, {b}); lambda too large for this weight"
                )));
            }
            extra.add(ln_term(p, b) - lr.exp_m1().ln());
            b = a;
        }
        k = lo;
        lt = ln_term(p, lo);
    }

    loop {
        sum.add(lt);
        walked += 1;
        if walked > TERM_BUDGET {
            return Err(Error::Budget(format!("normalizer not certified within {TERM_BUDGET} terms")));
        }
        let next = lt + ln_ratio(p, k);
        k += 1;
        lt = next;
        let lrho = ln_ratio_upper(p, k);
        if lrho < 0.0 {
            let tail = ln_geometric(lt, lrho);
            if tail < sum.ln() + NEGLIGIBLE.ln() {
                extra.add(tail);
                break;
            }
        } else if far.is_none() && k > DIRECT_LIMIT {
            return Err(Error::Budget(format!("normalizer not certified within {DIRECT_LIMIT} terms")));
        }
    }
    let ln_value = sum.ln();
    let ln_rem = extra.ln();
    Ok(EtaValue {
        value: ln_value.exp(),
        ln_value,
        k_trunc: k,
        remainder_bound: ln_rem.exp(),
        rel_remainder_bound: (ln_rem - ln_value).exp(),
    })
}

/// Smallest k ≥ from with ln_ratio_upper(k) < 0; the bound is non-increasing in k.
fn first_ratio_below_one(p: &WpdParams, from: usize) -> Result<usize> {
    let mut hi = from.max(1);
    while ln_ratio_upper(p, hi) >= 0.0 {
        if hi > (1usize << 52) {
            return Err(Error::NoConvergence("normalizer series diverges: term ratio never drops below 1".into()));
        }
        hi *= 2;
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ln_ratio_upper(p, mid) < 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// −d/dk ln r(k), the log-concavity of the terms near k.
fn curvature(p: &WpdParams, k: usize) -> f64 {
    let d = (k as f64 * 1e-3).max(1.0) as usize;
    ((ln_ratio(p, k - d) - ln_ratio(p, k + d)) / (2 * d) as f64).max(1e-300)
}

/// P(Y = x) = λ^x w(x) / (x! η).
pub fn wpd_pmf(p: &WpdParams, x: usize) -> Result<f64> {
    let e = eta(p)?;
    Ok((ln_term(p, x) - e.ln_value).exp())
}

fn recursion_kind(p: &WpdParams) -> Option<bool> {
    if p.alpha == 1.0 && p.gamma == p.beta {
        Some(true)
    } else if p.alpha == 1.0 && p.nu == 1.0 {
        Some(false)
    } else {
        None
    }
}

/// ln of the pmf multiplier P(x+1)/P(x) for Model I (`true`) or II.
fn ln_multiplier(p: &WpdParams, model_i: bool, x: usize) -> f64 {
    let xf = x as f64;
    if model_i {
        let w = if p.nu == 1.0 { 0.0 } else { (1.0 - p.nu) * (xf + p.beta).ln() };
        p.lambda.ln() + w - (xf + 1.0).ln()
    } else {
        p.lambda.ln() + (xf + p.gamma).ln() - (xf + 1.0).ln() - (xf + p.beta).ln()
    }
}

/// pmf values 0..=x_max from P(0) and the Model I / Model II multiplier
/// (COM-Poisson, hyper-Poisson and Poisson are covered by these).
pub fn wpd_pmf_recursive(p: &WpdParams, x_max: usize) -> Result<Vec<f64>> {
    let Some(model_i) = recursion_kind(p) else {
        return domain("recursive pmf needs alpha = 1 with gamma = beta (Model I) or nu = 1 (Model II)");
    };
    let e = eta(p)?;
    let mut out = Vec::with_capacity(x_max + 1);
    let mut lp = ln_term(p, 0) - e.ln_value;
    for x in 0..=x_max {
        if x == 1 && p.beta == 0.0 {
            lp = ln_term(p, 1) - e.ln_value;
        }
        out.push(lp.exp());
        lp += ln_multiplier(p, model_i, x);
    }
    Ok(out)
}

/// pmf table from 0 until the cumulative mass exceeds 1 − tail.
pub fn wpd_pmf_until(p: &WpdParams, tail: f64, budget: usize) -> Result<Vec<f64>> {
    let e = eta(p)?;
    let kind = recursion_kind(p);
    let mut out = Vec::new();
    let mut acc = 0.0;
    let mut lp = ln_term(p, 0) - e.ln_value;
    let mut x = 0usize;
    while acc <= 1.0 - tail {
        if x >= budget {
            return Err(Error::Budget(format!("pmf table passed {budget} entries")));
        }
        if kind.is_none() || (x == 1 && p.beta == 0.0) {
            lp = ln_term(p, x) - e.ln_value;
        }
        let v = lp.exp();
        acc += v;
        out.push(v);
        if let Some(model_i) = kind {
            lp += ln_multiplier(p, model_i, x);
        }
        x += 1;
    }
    Ok(out)
}

/// Factorial moments a_r = λ^r η^{γ+r,ν}_{α,αr+β}(λ) / η^{γ,ν}_{α,β}(λ).
pub fn wpd_factorial_moments(p: &WpdParams, r_max: usize) -> Result<FactorialMomentSequence> {
    let e0 = eta(p)?;
    let mut a = vec![1.0];
    for r in 1..=r_max {
        let er = eta(&p.shifted(r))?;
        let l = r as f64 * p.lambda.ln() + er.ln_value - e0.ln_value;
        if l > 709.0 {
            return Err(Error::Overflow(format!("factorial moment a_{r} exceeds the double range")));
        }
        a.push(l.exp());
    }
    FactorialMomentSequence::new(a)
}

const FAA_MAX_ORDER: usize = 600;
const FAA_REL_ERR: f64 = 1e-9;

/// Factorial moments through the Taylor expansion in λ of 1/η, whose
/// derivatives D_i = Σ_k (−1)^k k! A_{0,0}^{−(k+1)} B_{i,k}(A_{1,0}, A_{2,0}, …)
/// come from partial Bell polynomials, with A_{m,r} = w(m+r).
///
/// The alternating sum over k is collapsed with the Bell recurrence
/// B_{i,k} = Σ_m C(i−1, m−1) x_m B_{i−m,k−1}, which turns the ordinary
/// coefficients d_i = D_i/i! into d_i = −Σ_{m=1}^{i} c_m d_{i−m},
/// c_m = A_{m,0}/(m! A_{0,0}). This runs in double-double arithmetic on the
/// λ-scaled coefficients, with a first-order bound on the propagated
/// rounding error.
///
/// The expansion converges only for λ inside the zero-free disc of η in the
/// complex plane; outside it, or when the rounding bound exceeds 1e−9
/// relative, the evaluation is refused.
pub fn wpd_factorial_moments_faa(p: &WpdParams, r_max: usize) -> Result<FactorialMomentSequence> {
    p.validate()?;
    let jm = FAA_MAX_ORDER;
    let lw: Vec<f64> = (0..=jm + r_max).map(|k| ln_weight(p, k)).collect();
    if lw[0] == f64::NEG_INFINITY {
        return domain("Faà di Bruno expansion needs w(0) > 0");
    }
    let ll = p.lambda.ln();
    let scaled = |l: f64, m: usize| (l - lw[0] - lgamma(m as f64 + 1.0) + m as f64 * ll).exp();
    // c̃_m = c_m λ^m
    let c: Vec<Dd> = (0..=jm).map(|m| if m == 0 { Dd::ZERO } else { Dd::new(scaled(lw[m], m)) }).collect();
    let eps = 1e-31;
    // d̃_i = d_i λ^i, with local rounding loc_i and propagated bound err_i
    let mut d = vec![Dd::ONE];
    let mut loc = vec![0.0];
    let mut n = jm;
    for i in 1..=jm {
        let (mut s, mut s_abs) = (Dd::ZERO, 0.0);
        for m in 1..=i {
            let t = c[m] * d[i - m];
            s = s + t;
            s_abs += t.to_f64().abs();
        }
        if !(s_abs < 1e250) {
            n = i - 1;
            break;
        }
        d.push(-s);
        loc.push(eps * (i + 1) as f64 * s_abs);
    }
    let d_abs: Vec<f64> = d.iter().map(|v| v.to_f64().abs()).collect();
    // a perturbation of d̃_j reaches d̃_i multiplied by d̃_{i−j}
    let err: Vec<f64> = (0..=n).map(|i| (0..=i).map(|j| loc[j] * d_abs[i - j]).sum()).collect();
    let mut a = vec![1.0];
    for r in 1..=r_max {
        // α̃_m = A_{m,r} λ^m/(m! A_{0,0})
        let alpha_m: Vec<Dd> = (0..=n).map(|m| Dd::new(scaled(lw[m + r], m))).collect();
        let mut sum = Dd::ZERO;
        let mut total_err = 0.0;
        let mut small = 0usize;
        let mut converged = false;
        let mut last = f64::INFINITY;
        for j in 0..=n {
            let (mut t, mut t_err) = (Dd::ZERO, 0.0);
            for i in 0..=j {
                let am = alpha_m[j - i];
                t = t + am * d[i];
                t_err += am.to_f64() * (err[i] + eps * (j + 4) as f64 * d_abs[i]);
            }
            let t = t.to_f64();
            sum = sum.add_f64(t);
            total_err += t_err;
            let s = sum.to_f64().abs();
            if t.abs() < 1e-17 * s {
                small += 1;
                if small >= 3 && t.abs() <= last {
                    converged = true;
                    total_err += 2.0 * t.abs();
                    break;
                }
            } else {
                small = 0;
            }
            last = t.abs();
        }
        if !converged {
            return Err(Error::NoConvergence(format!(
                "Faà di Bruno series for a_{r} not converged within {n} orders at lambda = {}",
                p.lambda
            )));
        }
        let s = sum.to_f64();
        if !(total_err <= FAA_REL_ERR * s.abs()) {
            return Err(Error::Cancellation { ratio: total_err / (f64::EPSILON * s.abs()) });
        }
        a.push(p.lambda.powi(r as i32) * s);
    }
    FactorialMomentSequence::new(a)
}

/// Dispersion verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dispersion {
    Overdispersed,
    Underdispersed,
    Equidispersed,
    Indeterminate,
}

/// Verdict of the Turán-type comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TuranVerdict {
    Overdispersed,
    Underdispersed,
    Boundary,
}

/// Verdict of the sufficient condition on the weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SufficientVerdict {
    Overdispersed,
    Underdispersed,
    Inconclusive,
}

/// Σ_{r≥0} (c+r)^{−2}: partial sum to 10^4 plus an Euler–Maclaurin tail.
pub(crate) fn trigamma_tail(c: f64) -> f64 {
    const N: usize = 10_000;
    let mut s = 0.0;
    for r in (0..N).rev() {
        let z = c + r as f64;
        s += 1.0 / (z * z);
    }
    let z = c + N as f64;
    s + 1.0 / z + 0.5 / (z * z) + 1.0 / (6.0 * z * z * z) - 1.0 / (30.0 * z.powi(5))
}

/// R(y) = Σ(y+γ+r)^{−2} / (α² Σ(αy+β+r)^{−2}); the law is overdispersed
/// when ν < R(y) for all y ≥ 0 and underdispersed when ν > R(y) for all y.
pub fn dispersion_ratio(p: &WpdParams, y: f64) -> f64 {
    if p.alpha == 0.0 {
        return f64::INFINITY;
    }
    trigamma_tail(y + p.gamma) / (p.alpha * p.alpha * trigamma_tail(p.alpha * y + p.beta))
}

/// Dispersion class from the ratio bound scanned over y ∈ [0, 50] in steps
/// of 0.1, with the limit R(∞) = 1/α closing the range.
pub fn dispersion_classify(p: &WpdParams) -> Result<Dispersion> {
    p.validate()?;
    if p.alpha == 1.0 && p.nu == 1.0 && p.gamma == p.beta {
        return Ok(Dispersion::Equidispersed);
    }
    if p.beta == 0.0 {
        // Model I limit: R(y) = 1 for y > 0
        return Ok(if p.nu > 1.0 { Dispersion::Underdispersed } else { Dispersion::Equidispersed });
    }
    let limit = if p.alpha == 0.0 { f64::INFINITY } else { 1.0 / p.alpha };
    let (mut over, mut under) = (p.nu <= limit, p.nu >= limit);
    for i in 0..=500 {
        let r = dispersion_ratio(p, i as f64 * 0.1);
        over &= p.nu < r;
        under &= p.nu > r;
        if !over && !under {
            break;
        }
    }
    Ok(match (over, under) {
        (true, false) => Dispersion::Overdispersed,
        (false, true) => Dispersion::Underdispersed,
        _ => Dispersion::Indeterminate,
    })
}

/// ln Σ_k exp(l(k)), summed until the terms fall below 1e−18 of the sum
/// with the last ratios below one and non-increasing.
fn log_series<F: FnMut(usize) -> f64>(mut l: F) -> Result<f64> {
    const BUDGET: usize = 1_000_000;
    let mut s = LogSum::new();
    let mut prev = f64::NAN;
    let mut run = 0usize;
    let mut last_ratio = f64::INFINITY;
    for k in 0..BUDGET {
        let lk = l(k);
        s.add(lk);
        let lr = lk - prev;
        prev = lk;
        if lk < s.ln() + (1e-18f64).ln() && lr < 0.0 && lr <= last_ratio + 1e-12 {
            run += 1;
            if run >= 10 {
                return Ok(s.ln());
            }
        } else {
            run = 0;
        }
        if lr.is_finite() {
            last_ratio = lr;
        }
    }
    Err(Error::NoConvergence(format!("shifted series not converged within {BUDGET} terms")))
}

/// Compares f(λ)·T²f(λ) with (Tf(λ))², T^j f(λ) = Σ λ^k w(k+j)/k!, for a
/// weight sequence given by its logarithm.
pub fn turan_check<F: Fn(usize) -> f64>(ln_w: F, lambda: f64) -> Result<TuranVerdict> {
    if !(lambda > 0.0) {
        return domain("turan_check needs lambda > 0");
    }
    let ll = lambda.ln();
    let shifted = |j: usize| log_series(|k| k as f64 * ll - lgamma(k as f64 + 1.0) + ln_w(k + j));
    let (f0, f1, f2) = (shifted(0)?, shifted(1)?, shifted(2)?);
    let d = f0 + f2 - 2.0 * f1;
    Ok(if d > 1e-10 {
        TuranVerdict::Overdispersed
    } else if d < -1e-10 {
        TuranVerdict::Underdispersed
    } else {
        TuranVerdict::Boundary
    })
}

/// Sign test of Σ_{j=0}^{k+1} [C(k,j) − C(k,j−1)] w(j) w(k−j+2) over k ≤ K.
pub fn sufficient_condition_check<F: Fn(usize) -> f64>(w: F, k_max: usize) -> SufficientVerdict {
    let binom = crate::specfun::binomial_rows(k_max);
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    for k in 0..=k_max {
        let c = |j: isize| if j < 0 || j as usize > k { 0.0 } else { binom[k][j as usize] };
        let (mut s, mut s_abs) = (0.0, 0.0);
        for j in 0..=(k + 1) {
            let t = (c(j as isize) - c(j as isize - 1)) * w(j) * w(k + 2 - j);
            s += t;
            s_abs += t.abs();
        }
        if s.abs() <= 1e-12 * s_abs {
            zero += 1;
        } else if s > 0.0 {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    match (pos, neg, zero) {
        (_, 0, 0) if pos > 0 => SufficientVerdict::Overdispersed,
        (0, _, 0) if neg > 0 => SufficientVerdict::Underdispersed,
        _ => SufficientVerdict::Inconclusive,
    }
}
