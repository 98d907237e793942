//! Command-line surface for countfit: data ingestion, pmf tables,
//! simulation, fitting, goodness of fit, comparison and moments.

use clap::{Args, Parser, Subcommand, ValueEnum};
use countfit::countdist::GfpdParams;
use countfit::inference::{
    compare, fit_grid, fit_simplex, gof_chisq_with, CountData, FitResult, Grid, Model, ModelParams, Pooling,
};
use countfit::sampling::RngStream;
use serde_json::{json, Map, Value};
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Seed used when neither --seed nor COUNTFIT_SEED is given.
pub const DEFAULT_SEED: u64 = 20_240_601;
/// Default Monte Carlo sample size.
pub const DEFAULT_MC_N: usize = 500_000;

/// Error with a stable code and the process exit status it maps to.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
    pub exit: i32,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError { code: "usage", message: message.into(), exit: 2 }
    }

    pub fn input(message: impl Into<String>) -> CliError {
        CliError { code: "input", message: message.into(), exit: 3 }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "code": self.code, "message": self.message } })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

impl From<countfit::Error> for CliError {
    fn from(e: countfit::Error) -> CliError {
        let exit = if matches!(e, countfit::Error::Domain(_)) { 4 } else { 5 };
        CliError { code: e.code(), message: e.to_string(), exit }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError { code: "io", message: e.to_string(), exit: 3 }
    }
}

type CliResult<T> = Result<T, CliError>;

// ------------------------------------------------------------ ingestion

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// One non-negative integer per line.
    Raw,
    /// Lines "value,frequency".
    Histogram,
}

/// Parses count data; blank lines are skipped and any other malformed line
/// is reported with its 1-based line number.
pub fn parse_counts(text: &str, format: InputFormat) -> CliResult<CountData> {
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| CliError::input(format!("line {}: {what} in {line:?}", i + 1));
        match format {
            InputFormat::Raw => {
                let v: u64 = line.parse().map_err(|_| bad("expected a non-negative integer"))?;
                pairs.push((v, 1));
            }
            InputFormat::Histogram => {
                let mut it = line.split(',');
                let (Some(v), Some(f), None) = (it.next(), it.next(), it.next()) else {
                    return Err(bad("expected value,frequency"));
                };
                let v: u64 = v.trim().parse().map_err(|_| bad("value is not a non-negative integer"))?;
                let f: u64 = f.trim().parse().map_err(|_| bad("frequency is not a non-negative integer"))?;
                pairs.push((v, f));
            }
        }
    }
    if pairs.is_empty() {
        return Err(CliError::input("no counts found"));
    }
    CountData::from_histogram(pairs).map_err(|e| CliError::input(e.to_string()))
}

/// Reads and parses a count file.
pub fn ingest(path: &Path, format: InputFormat) -> CliResult<CountData> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError { code: "io", message: format!("{}: {e}", path.display()), exit: 3 })?;
    parse_counts(&text, format).map_err(|e| CliError { message: format!("{}: {}", path.display(), e.message), ..e })
}

// ------------------------------------------------------------ arguments

#[derive(Parser, Debug)]
#[command(name = "countfit", version, about = "Fractional and weighted Poisson count models")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// pmf table over the model's support (or 0..=x-max)
    Pmf(PmfArgs),
    /// Draw counts, one per line
    Sample(SampleArgs),
    /// Maximum-likelihood fit to a count file
    Fit(FitArgs),
    /// χ² goodness of fit of given parameters
    Gof(GofArgs),
    /// Fit several models and rank them by χ² p-value
    Compare(CompareArgs),
    /// Mean, variance, skewness and Fisher index
    Moments(MomentsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FitMethod {
    Grid,
    Simplex,
}

/// Model parameters by name; each model reads the ones it needs.
#[derive(Args, Debug, Default, Clone)]
pub struct ParamArgs {
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long)]
    pub nu: Option<f64>,
    #[arg(long)]
    pub mu: Option<f64>,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub size: Option<f64>,
    #[arg(long)]
    pub mean: Option<f64>,
    #[arg(long)]
    pub lambda1: Option<f64>,
    #[arg(long)]
    pub lambda2: Option<f64>,
}

impl ParamArgs {
    fn get(&self, name: &str) -> Option<f64> {
        match name {
            "alpha" => self.alpha,
            "beta" => self.beta,
            "gamma" => self.gamma,
            "delta" => self.delta,
            "nu" => self.nu,
            "mu" => self.mu,
            "lambda" => self.lambda,
            "size" => self.size,
            "mean" => self.mean,
            "lambda1" => self.lambda1,
            "lambda2" => self.lambda2,
            _ => None,
        }
    }

    fn any(&self) -> bool {
        ["alpha", "beta", "gamma", "delta", "nu", "mu", "lambda", "size", "mean", "lambda1", "lambda2"]
            .iter()
            .any(|n| self.get(n).is_some())
    }

    fn vector(&self, model: Model) -> CliResult<Vec<f64>> {
        let names = model.param_names();
        let missing: Vec<String> =
            names.iter().filter(|n| self.get(n).is_none()).map(|n| format!("--{n}")).collect();
        if !missing.is_empty() {
            return Err(CliError::usage(format!("{model} needs {}", missing.join(", "))));
        }
        Ok(names.iter().map(|n| self.get(n).unwrap()).collect())
    }
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Count file
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Raw)]
    pub input_format: InputFormat,
}

#[derive(Args, Debug)]
pub struct PmfArgs {
    #[arg(long)]
    pub model: String,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Largest x; defaults to the adaptive support
    #[arg(long)]
    pub x_max: Option<usize>,
    /// Monte Carlo estimates (gfPd models only)
    #[arg(long)]
    pub mc: bool,
    #[arg(long, default_value_t = DEFAULT_MC_N)]
    pub mc_n: usize,
    #[arg(long, env = "COUNTFIT_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[arg(long)]
    pub model: String,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, env = "COUNTFIT_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct FitArgs {
    #[arg(long)]
    pub model: String,
    #[command(flatten)]
    pub input: InputArgs,
    /// Defaults to grid for fpd and simplex otherwise
    #[arg(long, value_enum)]
    pub method: Option<FitMethod>,
    /// Grid axis "name=lo:hi:n", one per parameter (fpd has a default grid)
    #[arg(long = "grid")]
    pub grid: Vec<String>,
    /// Simplex start; defaults to moment-based values
    #[command(flatten)]
    pub init: ParamArgs,
    /// One χ² cell per count value instead of pooling to expected ≥ 5
    #[arg(long)]
    pub no_pool: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct GofArgs {
    #[arg(long)]
    pub model: String,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub no_pool: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    /// Comma-separated model names
    #[arg(long, value_delimiter = ',', required = true)]
    pub models: Vec<String>,
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub no_pool: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct MomentsArgs {
    #[arg(long)]
    pub model: String,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
}

fn parse_model(name: &str) -> CliResult<Model> {
    Model::from_name(name.trim()).ok_or_else(|| CliError::usage(format!("unknown model {name:?}")))
}

fn pooling(no_pool: bool) -> Pooling {
    if no_pool {
        Pooling::None
    } else {
        Pooling::default()
    }
}

fn parse_grid(model: Model, specs: &[String]) -> CliResult<Grid> {
    if specs.is_empty() {
        return if model == Model::Fpd {
            Ok(Grid::fpd_default())
        } else {
            Err(CliError::usage(format!("{model} has no default grid; give --grid name=lo:hi:n per parameter")))
        };
    }
    let names = model.param_names();
    let mut axes: Vec<Option<Vec<f64>>> = vec![None; names.len()];
    for s in specs {
        let bad = || CliError::usage(format!("grid axis {s:?} is not name=lo:hi:n"));
        let (name, range) = s.split_once('=').ok_or_else(bad)?;
        let idx = names
            .iter()
            .position(|n| *n == name.trim())
            .ok_or_else(|| CliError::usage(format!("{model} has no parameter {name:?}")))?;
        let parts: Vec<&str> = range.split(':').collect();
        let axis = match parts.as_slice() {
            [v] => vec![v.trim().parse().map_err(|_| bad())?],
            [lo, hi, n] => {
                let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
                let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
                let n: usize = n.trim().parse().map_err(|_| bad())?;
                Grid::linspace(lo, hi, n)
            }
            _ => return Err(bad()),
        };
        axes[idx] = Some(axis);
    }
    let missing: Vec<&str> = names.iter().zip(&axes).filter(|(_, a)| a.is_none()).map(|(n, _)| *n).collect();
    if !missing.is_empty() {
        return Err(CliError::usage(format!("grid lacks axes for {}", missing.join(", "))));
    }
    Ok(Grid::Product(axes.into_iter().map(Option::unwrap).collect()))
}

// ------------------------------------------------------------ output

fn params_json(model: Model, params: &[f64]) -> Value {
    let mut m = Map::new();
    for (n, v) in model.param_names().iter().zip(params) {
        m.insert((*n).to_string(), num(*v));
    }
    Value::Object(m)
}

fn params_text(model: Model, params: &[f64]) -> String {
    model.param_names().iter().zip(params).map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(";")
}

fn num(v: f64) -> Value {
    serde_json::Number::from_f64(v).map(Value::Number).unwrap_or_else(|| Value::String(v.to_string()))
}

fn fit_json(r: &FitResult) -> Value {
    json!({
        "model": r.model.name(),
        "params": params_json(r.model, &r.params),
        "loglik": num(r.loglik),
        "chi2": num(r.chi2),
        "df": r.df,
        "p_value": num(r.p_value),
        "converged": r.converged,
        "evaluations": r.evaluations,
    })
}

const FIT_COLUMNS: [&str; 8] = ["model", "params", "loglik", "chi2", "df", "p_value", "converged", "evaluations"];

fn fit_cells(r: &FitResult) -> Vec<String> {
    vec![
        r.model.name().to_string(),
        params_text(r.model, &r.params),
        r.loglik.to_string(),
        r.chi2.to_string(),
        r.df.to_string(),
        r.p_value.to_string(),
        r.converged.to_string(),
        r.evaluations.to_string(),
    ]
}

fn write_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut w: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            w[i] = w[i].max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        cells.iter().enumerate().map(|(i, c)| format!("{c:<width$}", width = w[i])).collect::<Vec<_>>().join("  ")
    };
    writeln!(out, "{}", line(header.to_vec()).trim_end())?;
    for r in rows {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect()).trim_end())?;
    }
    Ok(())
}

fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    writeln!(out, "{}", header.join(","))?;
    for r in rows {
        writeln!(out, "{}", r.join(","))?;
    }
    Ok(())
}

fn emit(out: &mut dyn Write, format: OutputFormat, header: &[&str], rows: &[Vec<String>], json: Value) -> CliResult<()> {
    match format {
        OutputFormat::Table => write_table(out, header, rows)?,
        OutputFormat::Csv => write_csv(out, header, rows)?,
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&json).expect("serializable"))?,
    }
    Ok(())
}

// ------------------------------------------------------------ commands

fn cmd_pmf(a: &PmfArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let model = parse_model(&a.model)?;
    let mp = ModelParams::new(model, a.params.vector(model)?)?;
    if a.mc {
        let g = match model {
            Model::Fpd if mp.params[0] > 0.0 => GfpdParams::fpd(mp.params[0], mp.params[1])?,
            Model::Gfpd => GfpdParams::new(mp.params[0], mp.params[1], mp.params[2], mp.params[3])?,
            _ => return Err(CliError::usage("--mc applies to fpd (alpha > 0) and gfpd")),
        };
        let x_max = match a.x_max {
            Some(x) => x,
            None => (4.0 * g.mean()).ceil().max(10.0) as usize,
        };
        writeln!(err, "seed={}", a.seed)?;
        let mut rows = Vec::new();
        let mut js = Vec::new();
        for x in 0..=x_max {
            let mut rng = RngStream::substream(a.seed, x as u64);
            let e = countfit::countdist::gfpd_pmf_mc(&g, x, a.mc_n, &mut rng)?;
            rows.push(vec![x.to_string(), e.estimate.to_string(), e.std_error.to_string()]);
            js.push(json!({ "x": x, "probability": num(e.estimate), "std_error": num(e.std_error) }));
        }
        let j = json!({ "model": model.name(), "params": params_json(model, &mp.params), "seed": a.seed, "mc_n": a.mc_n, "pmf": js });
        return emit(out, a.format, &["x", "probability", "std_error"], &rows, j);
    }
    let table = match a.x_max {
        Some(x) => mp.pmf_table(x)?,
        None => mp.pmf_support()?,
    };
    let rows: Vec<Vec<String>> = table.iter().enumerate().map(|(x, p)| vec![x.to_string(), p.to_string()]).collect();
    let js: Vec<Value> = table.iter().enumerate().map(|(x, p)| json!({ "x": x, "probability": num(*p) })).collect();
    let j = json!({ "model": model.name(), "params": params_json(model, &mp.params), "pmf": js });
    emit(out, a.format, &["x", "probability"], &rows, j)
}

fn cmd_sample(a: &SampleArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let model = parse_model(&a.model)?;
    let mp = ModelParams::new(model, a.params.vector(model)?)?;
    let batch = mp.sample(a.n, &mut RngStream::new(a.seed))?;
    match a.format {
        OutputFormat::Json => {
            let j = json!({ "model": model.name(), "params": params_json(model, &mp.params), "seed": a.seed, "n": batch.n, "values": batch.values });
            writeln!(out, "{}", serde_json::to_string_pretty(&j).expect("serializable"))?;
        }
        _ => {
            writeln!(err, "seed={}", a.seed)?;
            for v in &batch.values {
                writeln!(out, "{v}")?;
            }
        }
    }
    Ok(())
}

fn cmd_fit(a: &FitArgs, out: &mut dyn Write) -> CliResult<()> {
    let model = parse_model(&a.model)?;
    let data = ingest(&a.input.input, a.input.input_format)?;
    let method = a.method.unwrap_or(if model.prefers_grid() { FitMethod::Grid } else { FitMethod::Simplex });
    let mut r = match method {
        FitMethod::Grid => fit_grid(model, &data, &parse_grid(model, &a.grid)?)?,
        FitMethod::Simplex => {
            let init = if a.init.any() { a.init.vector(model)? } else { model.default_init(&data) };
            fit_simplex(model, &data, &init)?
        }
    };
    if a.no_pool {
        let g = gof_chisq_with(&r.model_params(), &data, Pooling::None)?;
        r.chi2 = g.chi2;
        r.df = g.df;
        r.p_value = g.p_value;
    }
    emit(out, a.format, &FIT_COLUMNS, &[fit_cells(&r)], fit_json(&r))
}

fn cmd_gof(a: &GofArgs, out: &mut dyn Write) -> CliResult<()> {
    let model = parse_model(&a.model)?;
    let mp = ModelParams::new(model, a.params.vector(model)?)?;
    let data = ingest(&a.input.input, a.input.input_format)?;
    let g = gof_chisq_with(&mp, &data, pooling(a.no_pool))?;
    let hi = |h: Option<u64>| h.map(|v| v.to_string()).unwrap_or_else(|| "inf".to_string());
    match a.format {
        OutputFormat::Json => {
            let cells: Vec<Value> = g
                .cells
                .iter()
                .map(|c| json!({ "lo": c.lo, "hi": c.hi, "observed": num(c.observed), "expected": num(c.expected) }))
                .collect();
            let j = json!({
                "model": model.name(),
                "params": params_json(model, &mp.params),
                "chi2": num(g.chi2),
                "df": g.df,
                "p_value": num(g.p_value),
                "cells": cells,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&j).expect("serializable"))?;
        }
        f => {
            let rows: Vec<Vec<String>> = g
                .cells
                .iter()
                .map(|c| vec![c.lo.to_string(), hi(c.hi), c.observed.to_string(), c.expected.to_string()])
                .collect();
            let header = ["lo", "hi", "observed", "expected"];
            let summary = vec![vec![model.name().to_string(), params_text(model, &mp.params), g.chi2.to_string(), g.df.to_string(), g.p_value.to_string()]];
            let sh = ["model", "params", "chi2", "df", "p_value"];
            if f == OutputFormat::Csv {
                write_csv(out, &sh, &summary)?;
                write_csv(out, &header, &rows)?;
            } else {
                write_table(out, &sh, &summary)?;
                writeln!(out)?;
                write_table(out, &header, &rows)?;
            }
        }
    }
    Ok(())
}

fn cmd_compare(a: &CompareArgs, out: &mut dyn Write) -> CliResult<()> {
    let models = a.models.iter().map(|m| parse_model(m)).collect::<CliResult<Vec<_>>>()?;
    let data = ingest(&a.input.input, a.input.input_format)?;
    let rows = compare(&models, &data, pooling(a.no_pool))?;
    let mut header: Vec<&str> = FIT_COLUMNS.to_vec();
    header.push("error");
    let mut cells = Vec::new();
    let mut js = Vec::new();
    for r in &rows {
        match &r.result {
            Ok(f) => {
                let mut c = fit_cells(f);
                c.push(String::new());
                cells.push(c);
                js.push(fit_json(f));
            }
            Err(e) => {
                let mut c = vec![r.model.name().to_string()];
                c.extend(std::iter::repeat_n(String::new(), FIT_COLUMNS.len() - 1));
                c.push(format!("{}: {e}", e.code()));
                cells.push(c);
                js.push(json!({ "model": r.model.name(), "error": { "code": e.code(), "message": e.to_string() } }));
            }
        }
    }
    emit(out, a.format, &header, &cells, Value::Array(js))
}

fn cmd_moments(a: &MomentsArgs, out: &mut dyn Write) -> CliResult<()> {
    let model = parse_model(&a.model)?;
    let mp = ModelParams::new(model, a.params.vector(model)?)?;
    let s = mp.summary()?;
    let row = vec![
        model.name().to_string(),
        params_text(model, &mp.params),
        s.mean.to_string(),
        s.variance.to_string(),
        s.skewness.to_string(),
        s.fisher_index.to_string(),
    ];
    let j = json!({
        "model": model.name(),
        "params": params_json(model, &mp.params),
        "mean": num(s.mean),
        "variance": num(s.variance),
        "skewness": num(s.skewness),
        "fisher_index": num(s.fisher_index),
    });
    emit(out, a.format, &["model", "params", "mean", "variance", "skewness", "fisher_index"], &[row], j)
}

/// Executes one command, writing results to `out` and notes (seed echo) to
/// `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Pmf(a) => cmd_pmf(a, out, err),
        Command::Sample(a) => cmd_sample(a, out, err),
        Command::Fit(a) => cmd_fit(a, out),
        Command::Gof(a) => cmd_gof(a, out),
        Command::Compare(a) => cmd_compare(a, out),
        Command::Moments(a) => cmd_moments(a, out),
    }
}
