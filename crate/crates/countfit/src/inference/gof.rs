use super::fit::{fit_grid, fit_simplex, Grid};
use super::{CountData, FitResult, Model, ModelParams};
use crate::error::{domain, Error, Result};
use crate::specfun::chi2_sf;

/// Cell construction for the χ² statistic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Pooling {
    /// Merge tail cells inward until each expected count reaches the value.
    MinExpected(f64),
    /// One cell per count value, the last one holding the upper tail.
    None,
}

impl Default for Pooling {
    fn default() -> Self {
        Pooling::MinExpected(5.0)
    }
}

/// A χ² cell covering counts lo..=hi (hi = None for the open upper tail).
#[derive(Clone, Debug, PartialEq)]
pub struct Cell {
    pub lo: u64,
    pub hi: Option<u64>,
    pub observed: f64,
    pub expected: f64,
}

impl Cell {
    fn absorb(&mut self, other: &Cell) {
        self.lo = self.lo.min(other.lo);
        self.hi = match (self.hi, other.hi) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        };
        self.observed += other.observed;
        self.expected += other.expected;
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GofResult {
    pub chi2: f64,
    pub df: usize,
    pub p_value: f64,
    pub cells: Vec<Cell>,
}

/// χ² goodness of fit with cells pooled to an expected count of at least 5.
pub fn gof_chisq(mp: &ModelParams, data: &CountData) -> Result<GofResult> {
    gof_chisq_with(mp, data, Pooling::default())
}

/// χ² goodness of fit with explicit pooling; df = cells − 1 − free params.
pub fn gof_chisq_with(mp: &ModelParams, data: &CountData, pooling: Pooling) -> Result<GofResult> {
    let k = data.max_value() as usize;
    let pmf = mp.pmf_table(k)?;
    let n = data.n_total() as f64;
    let mut cells: Vec<Cell> = (0..=k)
        .map(|x| Cell {
            lo: x as u64,
            hi: if x == k { None } else { Some(x as u64) },
            observed: *data.histogram().get(&(x as u64)).unwrap_or(&0) as f64,
            expected: n * pmf[x],
        })
        .collect();
    let head: f64 = pmf[..k].iter().sum();
    cells[k].expected = n * (1.0 - head).max(0.0);
    let cells = match pooling {
        Pooling::None => cells.into_iter().filter(|c| c.expected > 0.0 || c.observed > 0.0).collect(),
        Pooling::MinExpected(min) => pool(cells, min),
    };
    let free = mp.model.n_params();
    if cells.len() < free + 2 {
        return domain(format!(
            "only {} cells remain after pooling; {} free parameters need at least {}",
            cells.len(),
            free,
            free + 2
        ));
    }
    let chi2: f64 = cells
        .iter()
        .map(|c| {
            if c.expected > 0.0 {
                (c.observed - c.expected).powi(2) / c.expected
            } else if c.observed > 0.0 {
                f64::INFINITY
            } else {
                0.0
            }
        })
        .sum();
    let df = cells.len() - 1 - free;
    let p_value = if chi2.is_finite() { chi2_sf(chi2, df as f64)? } else { 0.0 };
    Ok(GofResult { chi2, df, p_value, cells })
}

fn pool(cells: Vec<Cell>, min: f64) -> Vec<Cell> {
    let m = cells
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.expected.total_cmp(&b.1.expected).then(b.0.cmp(&a.0)))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut center = cells[m].clone();
    let mut left = Vec::new();
    let mut acc: Option<Cell> = None;
    for c in &cells[..m] {
        match acc.as_mut() {
            Some(a) => a.absorb(c),
            None => acc = Some(c.clone()),
        }
        if acc.as_ref().unwrap().expected >= min {
            left.push(acc.take().unwrap());
        }
    }
    if let Some(a) = acc.take() {
        center.absorb(&a);
    }
    let mut right = Vec::new();
    for c in cells[m + 1..].iter().rev() {
        match acc.as_mut() {
            Some(a) => a.absorb(c),
            None => acc = Some(c.clone()),
        }
        if acc.as_ref().unwrap().expected >= min {
            right.push(acc.take().unwrap());
        }
    }
    if let Some(a) = acc.take() {
        center.absorb(&a);
    }
    let mut out = left;
    out.push(center);
    out.extend(right.into_iter().rev());
    // a cell can still fall short when the total mass is small
    while out.len() > 1 {
        let Some(i) = (0..out.len()).filter(|&i| out[i].expected < min).min_by(|&a, &b| out[a].expected.total_cmp(&out[b].expected))
        else {
            break;
        };
        let j = if i == 0 {
            1
        } else if i == out.len() - 1 || out[i - 1].expected <= out[i + 1].expected {
            i - 1
        } else {
            i + 1
        };
        let c = out.remove(i.max(j));
        out[i.min(j)].absorb(&c);
    }
    out
}

/// One row of a comparison report.
#[derive(Clone, Debug)]
pub struct CompareRow {
    pub model: Model,
    pub result: std::result::Result<FitResult, Error>,
}

/// Fits each model (the default grid for fPd, the simplex from moment
/// starting values otherwise) and sorts the rows by p-value, highest first.
/// Failed fits are kept as rows after the successful ones.
pub fn compare(models: &[Model], data: &CountData, pooling: Pooling) -> Result<Vec<CompareRow>> {
    if models.len() < 2 {
        return domain("compare needs at least two models");
    }
    let mut rows: Vec<CompareRow> = models
        .iter()
        .map(|&model| {
            let fitted = if model.prefers_grid() {
                fit_grid(model, data, &Grid::fpd_default())
            } else {
                fit_simplex(model, data, &model.default_init(data))
            };
            let result = fitted.and_then(|mut r| {
                if pooling != Pooling::default() {
                    let g = gof_chisq_with(&r.model_params(), data, pooling)?;
                    r.chi2 = g.chi2;
                    r.df = g.df;
                    r.p_value = g.p_value;
                }
                Ok(r)
            });
            CompareRow { model, result }
        })
        .collect();
    rows.sort_by(|a, b| match (&a.result, &b.result) {
        (Ok(x), Ok(y)) => y.p_value.total_cmp(&x.p_value).then(a.model.name().cmp(b.model.name())),
        (Ok(_), Err(_)) => std::cmp::Ordering::Less,
        (Err(_), Ok(_)) => std::cmp::Ordering::Greater,
        (Err(_), Err(_)) => a.model.name().cmp(b.model.name()),
    });
    Ok(rows)
}
