//! Estimating `c01` from the boundary condition `w(1) = 0`, and the error table.

use std::time::{Duration, Instant};

use super::RiccatiProblem;
use crate::algebra::{Poly, Scalar};
use crate::bivariate::{BivPade, Side};
use crate::error::{PadeError, Result};

/// Which construction of the `(n, 1)` approximant to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Generic recursion on the generated series.
    General,
    /// Closed-form parameters (left) or coefficient ratios (right).
    Refined,
}

#[derive(Clone, Debug, PartialEq)]
pub struct C01Estimate<S> {
    pub value: S,
    pub side: Side,
    pub n: usize,
    pub algorithm: Algorithm,
    /// `|value - reference|`, once compared.
    pub error_vs_exact: Option<f64>,
}

impl<S: Scalar> C01Estimate<S> {
    pub fn compare(mut self, reference: &S) -> Self {
        self.error_vs_exact = Some((self.value.clone() - reference).magnitude());
        self
    }
}

impl<S: Scalar> RiccatiProblem<S> {
    /// The `(n, 1)` approximant for a given `c01`.
    pub fn approximant(&self, c01: &S, n: usize, side: Side, algorithm: Algorithm) -> Result<BivPade<S>> {
        self.approximant_until(c01, n, side, algorithm, None)
    }

    fn approximant_until(
        &self,
        c01: &S,
        n: usize,
        side: Side,
        algorithm: Algorithm,
        deadline: Option<Instant>,
    ) -> Result<BivPade<S>> {
        match (side, algorithm) {
            (Side::Left, Algorithm::General) => self.left_general_until(c01, n, deadline),
            (Side::Left, Algorithm::Refined) => self.left_refined(c01, n),
            (Side::Right, Algorithm::General) => self.right_general_until(c01, n, deadline),
            (Side::Right, Algorithm::Refined) => self.right_refined(c01, n),
        }
    }

    /// `c01 = -A_{n,0}(1) / A_{n,1}(1)` with `A_{n,1}` built at `c01 = 1`.
    ///
    /// `A_{n,0}` does not depend on `c01` and `A_{n,1}` is linear in it, so a
    /// single construction suffices.
    pub fn estimate_c01(&self, n: usize, side: Side, algorithm: Algorithm) -> Result<C01Estimate<S>> {
        self.estimate_c01_until(n, side, algorithm, None)
    }

    pub fn estimate_c01_until(
        &self,
        n: usize,
        side: Side,
        algorithm: Algorithm,
        deadline: Option<Instant>,
    ) -> Result<C01Estimate<S>> {
        let pade = self.approximant_until(&S::one(), n, side, algorithm, deadline)?;
        let (a0, a1) = numerator_at_one(&pade);
        if a1.is_zero() {
            return Err(PadeError::DegenerateLevel { n, what: "A_{n,1}(1)" });
        }
        Ok(C01Estimate { value: -(a0 / a1), side, n, algorithm, error_vs_exact: None })
    }
}

fn numerator_at_one<S: Scalar>(pade: &BivPade<S>) -> (S, S) {
    let (num, _) = pade.y_slices();
    let at = |p: Option<&Poly<S>>| p.map_or_else(S::zero, |p| p.eval(&S::one()));
    (at(num.first()), at(num.get(1)))
}

/// Root of `c -> A_{n,0}(1) + A_{n,1}(1; c)` by bracketing and bisection,
/// rebuilding the approximant at each trial `c01`.
pub fn estimate_c01_bisect(
    problem: &RiccatiProblem<f64>,
    n: usize,
    side: Side,
    algorithm: Algorithm,
    tol: f64,
) -> Result<f64> {
    let g = |c: f64| -> Result<f64> {
        let pade = problem.approximant(&c, n, side, algorithm)?;
        let (a0, a1) = numerator_at_one(&pade);
        Ok(a0 + a1)
    };
    let mut half_width = 1.0f64;
    let (mut lo, mut hi) = (-half_width, half_width);
    let (mut glo, ghi) = (g(lo)?, g(hi)?);
    let mut bracketed = glo * ghi <= 0.0;
    for _ in 0..200 {
        if bracketed {
            break;
        }
        half_width *= 2.0;
        lo = -half_width;
        hi = half_width;
        glo = g(lo)?;
        bracketed = glo * g(hi)? <= 0.0;
    }
    if !bracketed {
        return Err(PadeError::DegenerateLevel { n, what: "bisection bracket" });
    }
    for _ in 0..300 {
        let mid = 0.5 * (lo + hi);
        if (hi - lo) <= tol * mid.abs().max(1.0) {
            break;
        }
        let gm = g(mid)?;
        if gm == 0.0 {
            return Ok(mid);
        }
        if (gm < 0.0) == (glo < 0.0) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// One cell of the error table.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Value(f64),
    Timeout,
    Failed(String),
}

impl Cell {
    pub fn value(&self) -> Option<f64> {
        match self {
            Cell::Value(v) => Some(*v),
            _ => None,
        }
    }
}

/// Errors `|c01 - reference|` of the left and right estimates at one `n`, and
/// the wall-clock time of both sides together per algorithm.
#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub n: usize,
    pub err_left: Cell,
    pub err_right: Cell,
    pub time_general: Cell,
    pub time_refined: Cell,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableOptions {
    pub n_max: usize,
    /// Per-row budget for the general algorithm.
    pub timeout: Option<Duration>,
}

impl<S: Scalar> RiccatiProblem<S> {
    /// One table row. Errors come from the refined estimates, or from the
    /// general ones when the refined construction fails.
    pub fn error_row(&self, n: usize, reference: &S, timeout: Option<Duration>) -> TableRow {
        let sides = [Side::Left, Side::Right];

        let start = Instant::now();
        let refined: Vec<_> = sides.iter().map(|&s| self.estimate_c01(n, s, Algorithm::Refined)).collect();
        let time_refined = timed(start, &refined);

        let start = Instant::now();
        let deadline = timeout.map(|t| start + t);
        let mut general = Vec::with_capacity(2);
        for &s in &sides {
            let r = self.estimate_c01_until(n, s, Algorithm::General, deadline);
            let stop = matches!(r, Err(PadeError::Timeout));
            general.push(r);
            if stop {
                break;
            }
        }
        let time_general = timed(start, &general);

        let err = |i: usize| -> Cell {
            let pick = match (&refined[i], general.get(i)) {
                (Ok(e), _) => Ok(e),
                (Err(_), Some(Ok(e))) => Ok(e),
                (Err(e), _) => Err(e),
            };
            match pick {
                Ok(e) => Cell::Value(e.clone().compare(reference).error_vs_exact.unwrap()),
                Err(e) => Cell::Failed(e.to_string()),
            }
        };
        TableRow { n, err_left: err(0), err_right: err(1), time_general, time_refined }
    }
}

fn timed<T>(start: Instant, results: &[Result<T>]) -> Cell {
    let elapsed = start.elapsed().as_secs_f64();
    match results.iter().find_map(|r| r.as_ref().err()) {
        None if results.len() == 2 => Cell::Value(elapsed),
        Some(PadeError::Timeout) | None => Cell::Timeout,
        Some(e) => Cell::Failed(e.to_string()),
    }
}

/// Rows `n = 1..=n_max`, computed sequentially.
pub fn error_table<S: Scalar>(problem: &RiccatiProblem<S>, options: &TableOptions) -> Result<Vec<TableRow>> {
    let reference = problem.reference_c01()?;
    Ok((1..=options.n_max).map(|n| problem.error_row(n, &reference, options.timeout)).collect())
}
