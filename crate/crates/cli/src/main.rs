mod approx;
mod error;
mod riccati;
mod series_file;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pade_core::{Rational, Side};

use approx::{BivAlgo, UniAlgo};
use error::CliResult;
use riccati::{Format, TableRequest};
use series_file::SeriesFile;

/// Padé approximants by Jacobi-type recursions.
#[derive(Parser)]
#[command(name = "pade", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Args)]
struct ModeArg {
    /// Arithmetic; defaults to $PADE_MODE, then exact.
    #[arg(long, env = "PADE_MODE", value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Command {
    /// Univariate [n/n] of the x-axis series f(x, 0).
    Uni {
        series: PathBuf,
        n: usize,
        #[arg(long, value_enum, default_value_t = UniAlgo::Jacobi)]
        algo: UniAlgo,
        #[command(flatten)]
        mode: ModeArg,
    },
    /// Left or right bivariate approximant of order (n, m).
    Biv {
        series: PathBuf,
        n: usize,
        m: usize,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = BivAlgo::Recursion)]
        algo: BivAlgo,
        /// Also run the other algorithm and require equality.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        mode: ModeArg,
    },
    /// Error and timing table for the Riccati example.
    Riccati {
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value = "1/2")]
        beta: String,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        /// Budget per row for the general algorithm; 0 disables it.
        #[arg(long, default_value_t = 60.0)]
        timeout_secs: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Rows computed in parallel.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Estimate c01 by bisection in double precision instead of the linear solve.
        #[arg(long)]
        bisect: bool,
        #[command(flatten)]
        mode: ModeArg,
    },
    /// Writes the Riccati series c[n][m], n <= N, m <= M, as a series file.
    RiccatiSeries {
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value = "1/2")]
        beta: String,
        #[arg(long, default_value = "1")]
        c01: String,
        #[arg(long = "order-x")]
        order_x: usize,
        #[arg(long = "order-y")]
        order_y: usize,
        #[command(flatten)]
        mode: ModeArg,
    },
    /// Median timings of the univariate and bivariate algorithms, as CSV.
    Bench {
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value = "1/2")]
        beta: String,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[command(flatten)]
        mode: ModeArg,
    },
}

fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Uni { series, n, algo, mode } => {
            let file = SeriesFile::read(&series)?;
            match mode.mode {
                Mode::Exact => approx::run_uni::<Rational>(&file, n, algo),
                Mode::Float => approx::run_uni::<f64>(&file, n, algo),
            }
        }
        Command::Biv { series, n, m, side, algo, check, mode } => {
            let file = SeriesFile::read(&series)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            match mode.mode {
                Mode::Exact => approx::run_biv::<Rational>(&file, n, m, side, algo, check),
                Mode::Float => approx::run_biv::<f64>(&file, n, m, side, algo, check),
            }
        }
        Command::Riccati { alpha, beta, nmax, timeout_secs, format, jobs, bisect, mode } => {
            if !(timeout_secs >= 0.0 && timeout_secs.is_finite()) {
                return Err(error::CliError::Input("--timeout-secs must be a non-negative number".into()));
            }
            let req = TableRequest {
                alpha,
                beta,
                n_max: nmax,
                timeout: (timeout_secs > 0.0).then(|| Duration::from_secs_f64(timeout_secs)),
                format,
                jobs,
                bisect,
            };
            match mode.mode {
                Mode::Exact => riccati::run_riccati::<Rational>(&req),
                Mode::Float => riccati::run_riccati::<f64>(&req),
            }
        }
        Command::RiccatiSeries { alpha, beta, c01, order_x, order_y, mode } => match mode.mode {
            Mode::Exact => riccati::run_series::<Rational>(&alpha, &beta, &c01, order_x, order_y),
            Mode::Float => riccati::run_series::<f64>(&alpha, &beta, &c01, order_x, order_y),
        },
        Command::Bench { alpha, beta, nmax, repeats, mode } => match mode.mode {
            Mode::Exact => riccati::run_bench::<Rational>(&alpha, &beta, nmax, repeats),
            Mode::Float => riccati::run_bench::<f64>(&alpha, &beta, nmax, repeats),
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code() as u8)
        }
    }
}
