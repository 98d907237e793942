//! Double-exponential quadrature rules and the Poisson-mixture representation
//! of the gfPd law.
//!
//! A gfPd(α, β, δ, μ) variable is Poisson(μW) with W = B^α · Z, where
//! B ~ Beta(αδ, β − αδ) and Z is S^{−α} tilted by S^{−αδ} for a one-sided
//! α-stable S. Kanter's representation S^{−α} = a(U) E^{1−α} turns the
//! mixing law into a smooth positive integral over (U, E, B), so every pmf
//! value is a sum of positive terms.

use crate::error::{Error, Result};
use crate::specfun::lgamma;
use std::f64::consts::{FRAC_PI_2, PI};

#[derive(Clone, Copy, Debug)]
pub(crate) struct Node01 {
    pub x: f64,
    /// 1 − x, carried separately for accuracy near the right end
    pub xc: f64,
    pub w: f64,
}

/// Tanh-sinh rule on (0, 1) with step `h` over t ∈ [−4, 4].
pub(crate) fn tanh_sinh_01(h: f64) -> Vec<Node01> {
    let n = (4.0 / h).floor() as i64;
    let mut out = Vec::with_capacity(2 * n as usize + 1);
    for k in -n..=n {
        let t = k as f64 * h;
        let s = FRAC_PI_2 * t.sinh();
        let x = 1.0 / (1.0 + (-2.0 * s).exp());
        let xc = 1.0 / (1.0 + (2.0 * s).exp());
        let w = h * FRAC_PI_2 * t.cosh() / (2.0 * s.cosh().powi(2));
        if x > 0.0 && xc > 0.0 && w > 1e-300 {
            out.push(Node01 { x, xc, w });
        }
    }
    out
}

/// Exp-sinh rule on (0, ∞): nodes e = exp(π/2 sinh t), t ∈ [tmin, tmax].
pub(crate) fn exp_sinh(h: f64, tmin: f64, tmax: f64) -> Vec<(f64, f64)> {
    let k0 = (tmin / h).ceil() as i64;
    let k1 = (tmax / h).floor() as i64;
    (k0..=k1)
        .map(|k| {
            let t = k as f64 * h;
            let e = (FRAC_PI_2 * t.sinh()).exp();
            (e, h * FRAC_PI_2 * t.cosh() * e)
        })
        .collect()
}

/// ln a(u) for the Kanter kernel
/// a(u) = sin(πu) / (sin(απu)^α sin((1−α)πu)^{1−α}), decreasing from
/// α^{−α}(1−α)^{−(1−α)} at u = 0 to 0 at u = 1.
pub(crate) fn ln_kanter(alpha: f64, u: f64, uc: f64) -> f64 {
    if u == 0.0 {
        return -alpha * alpha.ln() - (1.0 - alpha) * (1.0 - alpha).ln();
    }
    let num = if u < 0.5 { (PI * u).sin() } else { (PI * uc).sin() };
    let mut l = num.ln();
    if alpha > 0.0 {
        l -= alpha * (alpha * PI * u).sin().ln();
    }
    if alpha < 1.0 {
        l -= (1.0 - alpha) * ((1.0 - alpha) * PI * u).sin().ln();
    }
    l
}

/// Beta(p, q) density rule on (0, 1), split at 1/2 with power substitutions
/// that absorb the endpoint singularities.
fn beta_rule(p: f64, q: f64, h: f64) -> Vec<(f64, f64)> {
    let ln_b = lgamma(p) + lgamma(q) - lgamma(p + q);
    let base = tanh_sinh_01(h);
    let mut out = Vec::with_capacity(2 * base.len());
    // left half: v = (2b)^p, b ∈ (0, 1/2)
    let sp = 0.5f64.powf(p);
    for n in &base {
        let b = (sp * n.x).powf(1.0 / p);
        let w = n.w * sp / p * ((q - 1.0) * (-b).ln_1p() - ln_b).exp();
        out.push((b, w));
    }
    // right half in the complement c = 1 − b
    let sq = 0.5f64.powf(q);
    for n in &base {
        let c = (sq * n.x).powf(1.0 / q);
        let w = n.w * sq / q * ((p - 1.0) * (-c).ln_1p() - ln_b).exp();
        out.push((1.0 - c, w));
    }
    out
}

/// Step sizes per integration dimension.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Steps {
    pub u: f64,
    pub e: f64,
    pub b: f64,
}

impl Steps {
    pub const ACCURATE: Steps = Steps { u: 1.0 / 12.0, e: 1.0 / 16.0, b: 1.0 / 12.0 };
    pub const FIT: Steps = Steps { u: 1.0 / 8.0, e: 1.0 / 10.0, b: 1.0 / 8.0 };

    /// Shrinks the steps when the Poisson factor becomes narrow, i.e. when
    /// rates around `lam_ref` are large. ln W moves with E through 1 − α and
    /// with B through α/p for a Beta(p, ·) factor, which sets how much each
    /// of those steps must shrink.
    pub fn scaled(self, lam_ref: f64, alpha: f64, beta_shape: f64) -> Steps {
        let s = |lam: f64| (SCALE_C / lam.max(1.0).sqrt()).min(1.0);
        Steps {
            u: self.u * s(lam_ref),
            e: self.e * s(lam_ref * (1.0 - alpha).powi(2)),
            b: self.b * s(lam_ref * alpha * alpha / beta_shape.min(1.0)),
        }
    }
}

const SCALE_C: f64 = 3.0;
const PRUNE: f64 = 1e-22;
const NODE_BUDGET: usize = 40_000_000;

/// Discrete mixing law: pairs (W, weight) with Σ weight ≈ 1, stored as the
/// product of the (U, E) nodes and the B^α nodes.
#[derive(Clone, Debug)]
pub(crate) struct Mixture {
    ue: Vec<(f64, f64)>,
    bs: Vec<(f64, f64)>,
}

impl Mixture {
    /// Mixing law of gfPd(α, β, δ, ·) for 0 < α < 1.
    pub fn gfpd(alpha: f64, beta: f64, delta: f64, steps: Steps) -> Result<Mixture> {
        debug_assert!(alpha > 0.0 && alpha < 1.0);
        let omega = beta - alpha * delta;
        let fpd = beta == 1.0 && delta == 1.0;
        let us = tanh_sinh_01(steps.u);
        let es = exp_sinh(steps.e, -4.0, 1.7);
        let mut bs: Vec<(f64, f64)> = if fpd || omega <= 1e-12 * beta {
            vec![(1.0, 1.0)]
        } else {
            beta_rule(alpha * delta, omega, steps.b)
                .into_iter()
                .filter(|n| n.1 > PRUNE)
                .map(|(b, w)| (b.powf(alpha), w))
                .collect()
        };
        // fPd needs no tilt: W = a(U) E^{1−α}; otherwise U and E are tilted
        // by (a E^{1−α})^δ and normalized by Γ(1+αδ)/Γ(1+δ)
        let tilt = if fpd { 0.0 } else { delta };
        let ln_c = if fpd { 0.0 } else { lgamma(1.0 + alpha * delta) - lgamma(1.0 + delta) };
        let mut ue = Vec::with_capacity(us.len() * es.len());
        let ln_e: Vec<(f64, f64)> = es.iter().map(|&(e, w)| (e.ln(), w)).collect();
        for n in &us {
            let la = ln_kanter(alpha, n.x, n.xc);
            if !la.is_finite() {
                continue;
            }
            for &(le, we) in &ln_e {
                let lw = la + (1.0 - alpha) * le;
                let lweight = ln_c + tilt * lw - le.exp() + n.w.ln() + we.ln();
                let weight = lweight.exp();
                if weight > PRUNE {
                    ue.push((lw.exp(), weight));
                }
            }
        }
        // heaviest first, so the product loop can stop early
        ue.sort_by(|a, b| b.1.total_cmp(&a.1));
        bs.sort_by(|a, b| b.1.total_cmp(&a.1));
        let m = Mixture { ue, bs };
        let total = m.node_count();
        if total > NODE_BUDGET {
            return Err(Error::Budget(format!(
                "mixture quadrature would need {total} nodes; use the Monte Carlo path"
            )));
        }
        Ok(m)
    }

    fn node_count(&self) -> usize {
        self.bs
            .iter()
            .map(|&(_, wb)| self.ue.partition_point(|&(_, wt)| wt * wb > PRUNE))
            .sum()
    }

    fn for_each_node(&self, mut f: impl FnMut(f64, f64)) {
        for &(ba, wb) in &self.bs {
            for &(w, wt) in &self.ue {
                let weight = wt * wb;
                if weight <= PRUNE {
                    break;
                }
                f(w * ba, weight);
            }
        }
    }

    #[cfg(test)]
    pub fn total_weight(&self) -> f64 {
        let mut s = 0.0;
        self.for_each_node(|_, weight| s += weight);
        s
    }

    /// pmf values 0..=xmax of the Poisson(μW) mixture.
    pub fn pmf_table(&self, mu: f64, xmax: usize) -> Vec<f64> {
        let mut out = vec![0.0; xmax + 1];
        let ln_fact: Vec<f64> = (0..=xmax).map(|x| lgamma(x as f64 + 1.0)).collect();
        self.for_each_node(|w, weight| {
            let lam = mu * w;
            if lam < 600.0 {
                let mut p = weight * (-lam).exp();
                out[0] += p;
                for (x, o) in out.iter_mut().enumerate().skip(1) {
                    p *= lam / x as f64;
                    *o += p;
                    if p < 1e-300 && x as f64 > lam {
                        break;
                    }
                }
            } else {
                let ll = lam.ln();
                let lwt = weight.ln();
                for (x, o) in out.iter_mut().enumerate() {
                    *o += (lwt + x as f64 * ll - lam - ln_fact[x]).exp();
                }
            }
        });
        out
    }

    /// Single pmf value at `x`.
    pub fn pmf_at(&self, mu: f64, x: usize) -> f64 {
        let xf = x as f64;
        let lf = lgamma(xf + 1.0);
        let mut s = 0.0;
        self.for_each_node(|w, weight| {
            let lam = mu * w;
            s += if x == 0 { weight * (-lam).exp() } else { weight * (xf * lam.ln() - lam - lf).exp() };
        });
        s
    }
}
