//! Scalar special functions: gamma family, three-parameter Mittag–Leffler,
//! Wright and M-Wright functions, Stirling and Bell numbers, chi-square tail.

pub(crate) mod dd;
mod incgamma;
pub(crate) mod series;

use crate::error::{domain, Result};
use crate::quadrature;
use dd::Dd;
use series::Term;

pub use incgamma::{gamma_q, chi2_sf};

/// Value of a truncated series with its stopping diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub terms_used: usize,
    pub est_truncation_error: f64,
}

/// ln Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return domain(format!("log_gamma needs a finite x > 0, got {x}"));
    }
    Ok(lgamma(x))
}

/// ln Γ(x) without validation; x > 0 assumed.
#[inline]
pub(crate) fn lgamma(x: f64) -> f64 {
    libm::lgamma_r(x).0
}

/// sin(πx) with exact zeros at the integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (std::f64::consts::PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// 1/Γ(x), zero at the non-positive integers.
pub fn reciprocal_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return domain("reciprocal_gamma needs a finite argument");
    }
    if x > 0.0 {
        return Ok(if x > 170.0 { (-lgamma(x)).exp() } else { 1.0 / libm::tgamma(x) });
    }
    if x == x.floor() {
        return Ok(0.0);
    }
    // 1/Γ(x) = sin(πx) Γ(1−x) / π
    let s = sin_pi(x);
    let l = s.abs().ln() + lgamma(1.0 - x) - std::f64::consts::PI.ln();
    Ok(s.signum() * l.exp())
}

/// ψ(x) for x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return domain(format!("digamma needs x > 0, got {x}"));
    }
    let mut x = x;
    let mut acc = 0.0;
    while x < 10.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let z2 = 1.0 / (x * x);
    // B_{2k}/(2k)
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
    ];
    let mut s = 0.0;
    for c in C.iter().rev() {
        s = s * z2 + c;
    }
    Ok(acc + x.ln() - 0.5 / x - s * z2)
}

/// Three-parameter Mittag–Leffler (Prabhakar) function
/// E^τ_{η,ν}(w) = Σ (τ)_j w^j / (j! Γ(ηj+ν)).
pub fn prabhakar_ml(eta: f64, nu: f64, tau: f64, w: f64) -> Result<SeriesValue> {
    if !(eta > 0.0 && nu > 0.0 && tau > 0.0) || !eta.is_finite() || !nu.is_finite() || !tau.is_finite() {
        return domain("prabhakar_ml needs eta, nu, tau > 0");
    }
    if !w.is_finite() {
        return domain("prabhakar_ml needs a finite argument");
    }
    if w == 0.0 {
        return Ok(SeriesValue { value: 1.0 / libm::tgamma(nu), terms_used: 1, est_truncation_error: 0.0 });
    }
    let ln_w = Dd::new(w.abs()).ln();
    let tau_d = Dd::new(tau);
    let ln_g_tau = dd::ln_gamma(tau_d);
    series::sum(0, |j| {
        let jf = j as f64;
        let l = dd::ln_gamma(tau_d.add_f64(jf)) - ln_g_tau + ln_w.mul_f64(jf)
            - dd::ln_gamma(Dd::new(jf + 1.0))
            - dd::ln_gamma(Dd::prod(eta, jf).add_f64(nu));
        let sign = if w < 0.0 && j % 2 == 1 { -1.0 } else { 1.0 };
        Term { ln_mag: l, sign, ln_env: l.to_f64() }
    })
}

/// Wright function φ(ξ, ω; z) = Σ z^r / (r! Γ(ξr+ω)), pole terms vanishing.
pub fn wright_phi(xi: f64, omega: f64, z: f64) -> Result<SeriesValue> {
    if !(xi > -1.0) || !xi.is_finite() || !omega.is_finite() || !z.is_finite() {
        return domain("wright_phi needs xi > -1 and finite omega, z");
    }
    if z == 0.0 {
        return Ok(SeriesValue { value: reciprocal_gamma(omega)?, terms_used: 1, est_truncation_error: 0.0 });
    }
    let ln_z = Dd::new(z.abs()).ln();
    series::sum(0, |r| {
        let rf = r as f64;
        let base = ln_z.mul_f64(rf) - dd::ln_gamma(Dd::new(rf + 1.0));
        let arg = Dd::prod(xi, rf).add_f64(omega);
        let zsign = if z < 0.0 && r % 2 == 1 { -1.0 } else { 1.0 };
        // |1/Γ| envelope drops the oscillating sine for negative arguments
        let env_rg = if arg.hi > 0.0 {
            -dd::ln_gamma(arg).to_f64()
        } else {
            (dd::ln_gamma(Dd::ONE - arg) - dd::LN_PI).to_f64()
        };
        match dd::ln_rgamma_signed(arg) {
            Some((lr, s)) => Term { ln_mag: base + lr, sign: zsign * s, ln_env: base.to_f64() + env_rg },
            None => Term { ln_mag: Dd::ZERO, sign: 0.0, ln_env: base.to_f64() + env_rg },
        }
    })
}

/// M-Wright density M_α(y), the law of S^{−α} for a one-sided α-stable S.
///
/// The reflection series is used while its cancellation stays within the
/// guard; past that point the positive integral
/// M_α(y) = κ y^{κ−1} ∫₀¹ a(u)^{−κ} exp(−(y/a(u))^κ) du, κ = 1/(1−α),
/// with the Kanter kernel a(u) takes over.
pub fn m_wright(alpha: f64, y: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return domain(format!("m_wright needs alpha in (0,1), got {alpha}"));
    }
    if !(y >= 0.0) || !y.is_finite() {
        return domain("m_wright needs a finite y >= 0");
    }
    match m_wright_series(alpha, y) {
        Ok(v) => Ok(v.value.max(0.0)),
        Err(_) => Ok(m_wright_integral(alpha, y)),
    }
}

pub(crate) fn m_wright_series(alpha: f64, y: f64) -> Result<SeriesValue> {
    if y == 0.0 {
        return Ok(SeriesValue { value: reciprocal_gamma(1.0 - alpha)?, terms_used: 1, est_truncation_error: 0.0 });
    }
    let ln_y = Dd::new(y).ln();
    series::sum(1, |j| {
        let jf = j as f64;
        let aj = Dd::prod(alpha, jf);
        let base = ln_y.mul_f64(jf - 1.0) - dd::ln_gamma(Dd::new(jf)) + dd::ln_gamma(aj) - dd::LN_PI;
        let s = aj.sin_pi();
        let env = base.to_f64();
        if s.hi == 0.0 {
            return Term { ln_mag: Dd::ZERO, sign: 0.0, ln_env: env };
        }
        let sign = if j % 2 == 0 { -s.hi.signum() } else { s.hi.signum() };
        Term { ln_mag: base + s.abs().ln(), sign, ln_env: env }
    })
}

pub(crate) fn m_wright_integral(alpha: f64, y: f64) -> f64 {
    let kappa = 1.0 / (1.0 - alpha);
    let nodes = quadrature::tanh_sinh_01(1.0 / (32.0 * kappa.sqrt()));
    let ln_y = y.ln();
    let logs: Vec<(f64, f64)> = nodes
        .iter()
        .map(|n| {
            let ln_a = quadrature::ln_kanter(alpha, n.x, n.xc);
            let l = -kappa * ln_a - (kappa * (ln_y - ln_a)).exp();
            (l, n.w)
        })
        .collect();
    let m = logs.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return 0.0;
    }
    let s: f64 = logs.iter().map(|(l, w)| w * (l - m).exp()).sum();
    (kappa.ln() + (kappa - 1.0) * ln_y + m).exp() * s
}

/// Stirling number of the second kind S(k, r).
pub fn stirling2(k: usize, r: usize) -> Result<u128> {
    if r > k {
        return domain(format!("stirling2 needs r <= k, got k={k}, r={r}"));
    }
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for n in 1..=k {
        for j in (1..=n.min(k)).rev() {
            let a = (j as u128).checked_mul(row[j]).and_then(|v| v.checked_add(row[j - 1]));
            match a {
                Some(v) => row[j] = v,
                None => return Err(crate::Error::Overflow(format!("S({k},{r}) exceeds 128 bits"))),
            }
        }
        row[0] = 0;
    }
    Ok(row[r])
}

/// Triangle of partial Bell polynomials B_{n,k}(x_1, …) for n ≤ nmax;
/// `x[i]` holds x_{i+1}.
pub(crate) fn bell_table(nmax: usize, x: &[f64]) -> Vec<Vec<f64>> {
    let mut b = vec![vec![0.0; nmax + 1]; nmax + 1];
    b[0][0] = 1.0;
    let binom = binomial_rows(nmax);
    for n in 1..=nmax {
        for k in 1..=n {
            let mut s = 0.0;
            for i in 1..=(n - k + 1) {
                s += binom[n - 1][i - 1] * x[i - 1] * b[n - i][k - 1];
            }
            b[n][k] = s;
        }
    }
    b
}

/// Partial Bell polynomial B_{n,k}(x_1, …, x_{n−k+1}).
pub fn bell_partial(n: usize, k: usize, x: &[f64]) -> Result<f64> {
    if k > n {
        return domain(format!("bell_partial needs k <= n, got n={n}, k={k}"));
    }
    if n == 0 {
        return Ok(1.0);
    }
    if k == 0 {
        return Ok(0.0);
    }
    if x.len() < n - k + 1 {
        return domain(format!("bell_partial needs {} entries, got {}", n - k + 1, x.len()));
    }
    let mut xs = x[..n - k + 1].to_vec();
    xs.resize(n, 0.0);
    Ok(bell_table(n, &xs)[n][k])
}

/// Rows 0..=nmax of Pascal's triangle as floats.
pub(crate) fn binomial_rows(nmax: usize) -> Vec<Vec<f64>> {
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let mut r = vec![1.0; n + 1];
        for k in 1..n {
            r[k] = rows[n - 1][k - 1] + rows[n - 1][k];
        }
        rows.push(r);
    }
    rows
}
