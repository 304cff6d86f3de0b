//! `uni` and `biv` subcommands.

use std::fmt::Write;

use pade_core::bivariate::{oracle_left_pade, oracle_right_pade};
use pade_core::{jacobi_pade, left_pade, oracle_pade, right_pade, BivPade, Degeneracy, Poly, Side};

use crate::error::{CliError, CliResult};
use crate::series_file::{FileScalar, SeriesFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum UniAlgo {
    Jacobi,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum BivAlgo {
    Recursion,
    Oracle,
}

fn list<S: FileScalar>(v: &[S]) -> String {
    let items: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("[{}]", items.join(", "))
}

fn poly_list<S: FileScalar>(p: &Poly<S>) -> String {
    if p.is_zero() {
        "[0]".into()
    } else {
        list(p.coeffs())
    }
}

pub fn run_uni<S: FileScalar>(file: &SeriesFile, n: usize, algo: UniAlgo) -> CliResult<String> {
    let series = file.to_series::<S>()?;
    series.require(2 * n, 0)?;
    let coeffs = series.x_coeffs(0, 2 * n);
    let pade = match algo {
        UniAlgo::Jacobi => jacobi_pade(&coeffs, n),
        UniAlgo::Oracle => oracle_pade(&coeffs, n),
    }
    .map_err(|e| CliError::at(e, n, 0))?;
    Ok(format!("A: {}  B: {}\ne: {}\n", poly_list(&pade.num), poly_list(&pade.den), list(&pade.errors)))
}

fn build<S: FileScalar>(
    series: &pade_core::BivSeries<S>,
    n: usize,
    m: usize,
    side: Side,
    algo: BivAlgo,
) -> CliResult<BivPade<S>> {
    let r = match (side, algo) {
        (Side::Left, BivAlgo::Recursion) => left_pade(series, n, m),
        (Side::Right, BivAlgo::Recursion) => right_pade(series, n, m),
        (Side::Left, BivAlgo::Oracle) => oracle_left_pade(series, n, m, Degeneracy::Reject),
        (Side::Right, BivAlgo::Oracle) => oracle_right_pade(series, n, m, Degeneracy::Reject),
    };
    r.map_err(|e| CliError::at(e, n, m))
}

fn agree<S: FileScalar>(a: &BivPade<S>, b: &BivPade<S>) -> bool {
    if S::EXACT {
        return a.coeff_matrices() == b.coeff_matrices();
    }
    let (an, ad) = a.coeff_matrices();
    let (bn, bd) = b.coeff_matrices();
    let close = |x: &Vec<Vec<S>>, y: &Vec<Vec<S>>| {
        x.iter().flatten().zip(y.iter().flatten()).all(|(u, v)| {
            let (u, v) = (u.to_f64(), v.to_f64());
            (u - v).abs() <= 1e-8 * u.abs().max(v.abs()).max(1.0)
        })
    };
    close(&an, &bn) && close(&ad, &bd)
}

pub fn run_biv<S: FileScalar>(
    file: &SeriesFile,
    n: usize,
    m: usize,
    side: Side,
    algo: BivAlgo,
    check: bool,
) -> CliResult<String> {
    let series = file.to_series::<S>()?;
    let pade = build(&series, n, m, side, algo)?;
    let label = match side {
        Side::Left => "y",
        Side::Right => "x",
    };
    let mut out = String::new();
    for (p, (a, b)) in pade.num.iter().zip(&pade.den).enumerate() {
        writeln!(out, "{label}^{p}  A: {}  B: {}", poly_list(a), poly_list(b)).unwrap();
    }
    if check {
        let other = match algo {
            BivAlgo::Recursion => BivAlgo::Oracle,
            BivAlgo::Oracle => BivAlgo::Recursion,
        };
        let twin = build(&series, n, m, side, other)?;
        if !agree(&pade, &twin) {
            return Err(CliError::Check(format!("check failed: recursion and oracle differ at (n={n}, m={m})")));
        }
        out.push_str("check: ok\n");
    }
    Ok(out)
}
