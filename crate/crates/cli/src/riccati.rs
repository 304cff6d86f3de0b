//! `riccati` and `bench` subcommands.

use std::fmt::Write;
use std::time::{Duration, Instant};

use pade_core::algebra::parse_rational;
use pade_core::riccati::{estimate_c01_bisect, Cell, TableRow};
use pade_core::{Algorithm, Rational, RiccatiProblem, Scalar, Side, UniAlgorithm};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::series_file::SeriesFile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

pub struct TableRequest {
    pub alpha: String,
    pub beta: String,
    pub n_max: usize,
    pub timeout: Option<Duration>,
    pub format: Format,
    pub jobs: usize,
    pub bisect: bool,
}

/// Parameters may be integers, `p/q` or decimals; decimals are read exactly.
pub fn problem<S: Scalar>(alpha: &str, beta: &str) -> CliResult<RiccatiProblem<S>> {
    let parse = |name: &str, s: &str| -> CliResult<Rational> {
        parse_rational(s).ok_or_else(|| CliError::Input(format!("cannot parse --{name} {s:?}")))
    };
    let (a, b) = (parse("alpha", alpha)?, parse("beta", beta)?);
    Ok(RiccatiProblem::new(S::from_rational(&a), S::from_rational(&b))?)
}

pub fn run_series<S: Scalar>(alpha: &str, beta: &str, c01: &str, order_x: usize, order_y: usize) -> CliResult<String> {
    let p = problem::<S>(alpha, beta)?;
    let c01 = parse_rational(c01).ok_or_else(|| CliError::Input(format!("cannot parse --c01 {c01:?}")))?;
    let series = p.generate_series(&S::from_rational(&c01), order_x, order_y)?;
    let name = format!("riccati alpha={} beta={} c01={}", p.alpha(), p.beta(), c01);
    Ok(SeriesFile::from_series(&name, &series).to_json() + "\n")
}

fn rows<S: Scalar>(p: &RiccatiProblem<S>, req: &TableRequest, reference: &S) -> CliResult<Vec<TableRow>> {
    let row = |n: usize| {
        if req.bisect {
            bisect_row(p, n, req.timeout)
        } else {
            p.error_row(n, reference, req.timeout)
        }
    };
    if req.jobs <= 1 {
        return Ok((1..=req.n_max).map(row).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(req.jobs)
        .build()
        .map_err(|e| CliError::Input(format!("--jobs: {e}")))?;
    Ok(pool.install(|| (1..=req.n_max).into_par_iter().map(row).collect()))
}

/// Row whose refined estimates come from bisection on the float problem.
fn bisect_row<S: Scalar>(p: &RiccatiProblem<S>, n: usize, timeout: Option<Duration>) -> TableRow {
    let float = p.to_f64();
    let reference = float.reference_c01();
    let mut row = float.error_row(n, reference.as_ref().unwrap_or(&0.0), timeout);
    let start = Instant::now();
    let est: Vec<_> = [Side::Left, Side::Right]
        .iter()
        .map(|&s| estimate_c01_bisect(&float, n, s, Algorithm::Refined, 1e-15))
        .collect();
    let elapsed = start.elapsed().as_secs_f64();
    let cell = |r: &pade_core::Result<f64>| match (r, &reference) {
        (Ok(v), Ok(c)) => Cell::Value((v - c).abs()),
        (Err(e), _) | (_, Err(e)) => Cell::Failed(e.to_string()),
    };
    row.err_left = cell(&est[0]);
    row.err_right = cell(&est[1]);
    row.time_refined = if est.iter().all(|r| r.is_ok()) { Cell::Value(elapsed) } else { Cell::Failed("bisection failed".into()) };
    row
}

pub fn run_riccati<S: Scalar>(req: &TableRequest) -> CliResult<String> {
    let p = problem::<S>(&req.alpha, &req.beta)?;
    if req.n_max == 0 {
        return Err(CliError::Input("--nmax must be at least 1".into()));
    }
    let reference = p.reference_c01()?;
    let rows = rows(&p, req, &reference)?;
    let mode = if S::EXACT { "exact" } else { "float" };
    Ok(match req.format {
        Format::Table => render_table(&p, reference.to_f64(), mode, &rows),
        Format::Csv => render_csv(&rows),
        Format::Json => render_json(&p, reference.to_f64(), mode, &rows),
    })
}

fn sci(v: f64) -> String {
    format!("{v:.4e}")
}

fn cell_text(c: &Cell, f: impl Fn(f64) -> String) -> String {
    match c {
        Cell::Value(v) => f(*v),
        Cell::Timeout => "?".into(),
        Cell::Failed(_) => "degenerate".into(),
    }
}

fn render_table<S: Scalar>(p: &RiccatiProblem<S>, reference: f64, mode: &str, rows: &[TableRow]) -> String {
    let mut out = String::new();
    writeln!(out, "alpha = {}, beta = {}, mode = {mode}, c01 = {reference:.15e}", p.alpha(), p.beta()).unwrap();
    writeln!(out, "{:>3}  {:>12}  {:>12}  {:>12}  {:>12}", "n", "err_left", "err_right", "t_general/s", "t_refined/s")
        .unwrap();
    for r in rows {
        writeln!(
            out,
            "{:>3}  {:>12}  {:>12}  {:>12}  {:>12}",
            r.n,
            cell_text(&r.err_left, sci),
            cell_text(&r.err_right, sci),
            cell_text(&r.time_general, |t| format!("{t:.4}")),
            cell_text(&r.time_refined, |t| format!("{t:.4}")),
        )
        .unwrap();
    }
    for r in rows {
        for c in [&r.err_left, &r.err_right, &r.time_general, &r.time_refined] {
            if let Cell::Failed(msg) = c {
                writeln!(out, "n = {}: {msg}", r.n).unwrap();
            }
        }
    }
    out
}

fn csv_field(s: String) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

fn render_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("n,err_left,err_right,time_general_s,time_refined_s\n");
    let field = |c: &Cell| match c {
        Cell::Value(v) => format!("{v:e}"),
        Cell::Timeout => "?".into(),
        Cell::Failed(msg) => csv_field(format!("error: {msg}")),
    };
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.n,
            field(&r.err_left),
            field(&r.err_right),
            field(&r.time_general),
            field(&r.time_refined)
        )
        .unwrap();
    }
    out
}

#[derive(Serialize)]
struct JsonTable<'a> {
    alpha: String,
    beta: String,
    mode: &'a str,
    reference_c01: f64,
    rows: Vec<JsonRow>,
}

#[derive(Serialize)]
struct JsonRow {
    n: usize,
    err_left: serde_json::Value,
    err_right: serde_json::Value,
    time_general_s: serde_json::Value,
    time_refined_s: serde_json::Value,
}

fn json_cell(c: &Cell) -> serde_json::Value {
    match c {
        Cell::Value(v) => serde_json::json!(v),
        Cell::Timeout => serde_json::json!("?"),
        Cell::Failed(msg) => serde_json::json!({ "error": msg }),
    }
}

fn render_json<S: Scalar>(p: &RiccatiProblem<S>, reference: f64, mode: &str, rows: &[TableRow]) -> String {
    let table = JsonTable {
        alpha: p.alpha().to_string(),
        beta: p.beta().to_string(),
        mode,
        reference_c01: reference,
        rows: rows
            .iter()
            .map(|r| JsonRow {
                n: r.n,
                err_left: json_cell(&r.err_left),
                err_right: json_cell(&r.err_right),
                time_general_s: json_cell(&r.time_general),
                time_refined_s: json_cell(&r.time_refined),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&table).expect("table serializes") + "\n"
}

/// Median wall time of `f` over `repeats` runs.
fn median_time<T>(repeats: usize, mut f: impl FnMut() -> pade_core::Result<T>) -> CliResult<f64> {
    let mut times = Vec::with_capacity(repeats);
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        f()?;
        times.push(start.elapsed().as_secs_f64());
    }
    times.sort_by(f64::total_cmp);
    Ok(times[times.len() / 2])
}

pub fn run_bench<S: Scalar>(alpha: &str, beta: &str, n_max: usize, repeats: usize) -> CliResult<String> {
    let p = problem::<S>(alpha, beta)?;
    let mut out = String::from(
        "n,uni_general_s,uni_explicit_s,uni_ratios_s,left_general_s,left_refined_s,right_general_s,right_refined_s\n",
    );
    for n in 1..=n_max {
        let mut cols = Vec::with_capacity(7);
        for algo in [UniAlgorithm::General, UniAlgorithm::ExplicitParams, UniAlgorithm::CoefficientRatios] {
            cols.push(median_time(repeats, || p.univariate_polys(n, algo))?);
        }
        for side in [Side::Left, Side::Right] {
            for algo in [Algorithm::General, Algorithm::Refined] {
                cols.push(median_time(repeats, || p.estimate_c01(n, side, algo))?);
            }
        }
        let cols: Vec<String> = cols.iter().map(|t| format!("{t:e}")).collect();
        writeln!(out, "{n},{}", cols.join(",")).unwrap();
    }
    Ok(out)
}
