//! The singular Riccati equation `x w' - beta w + beta w^2 + alpha x = 0`,
//! whose solution is a bivariate series in `x` and `y = x^beta`.

mod closed_form;
mod estimate;
mod reference;

pub use closed_form::UniAlgorithm;
pub use estimate::{error_table, estimate_c01_bisect, Algorithm, C01Estimate, Cell, TableOptions, TableRow};
pub use reference::{evaluate_bessel_solution, exact_c01, BesselReference, RationalFormCoeffs};

use std::time::Instant;

use crate::algebra::Scalar;
use crate::error::{PadeError, Result};
use crate::series::BivSeries;

/// Equation parameters. `beta` must be positive and non-integer.
#[derive(Clone, Debug, PartialEq)]
pub struct RiccatiProblem<S> {
    alpha: S,
    beta: S,
}

impl<S: Scalar> RiccatiProblem<S> {
    pub fn new(alpha: S, beta: S) -> Result<Self> {
        if alpha.to_f64() <= 0.0 || alpha.is_zero() {
            return Err(PadeError::InvalidParameter("alpha must be positive".into()));
        }
        if beta.to_f64() <= 0.0 || beta.is_zero() {
            return Err(PadeError::InvalidParameter("beta must be positive".into()));
        }
        if beta.is_integer() {
            return Err(PadeError::InvalidParameter("beta must be non-integer".into()));
        }
        Ok(RiccatiProblem { alpha, beta })
    }

    pub fn alpha(&self) -> &S {
        &self.alpha
    }

    pub fn beta(&self) -> &S {
        &self.beta
    }

    pub fn to_f64(&self) -> RiccatiProblem<f64> {
        RiccatiProblem { alpha: self.alpha.to_f64(), beta: self.beta.to_f64() }
    }

    /// Series coefficients `c[n][m]`, `n <= big_n`, `m <= big_m`, with `c[0][1] = c01`.
    ///
    /// `(n + (m-1) beta) c[n][m] = -alpha [n=1, m=0] - beta sum c[i][j] c[n-i][m-j]`,
    /// the sum over `(0,0) < (i,j) < (n,m)` componentwise.
    pub fn generate_series(&self, c01: &S, big_n: usize, big_m: usize) -> Result<BivSeries<S>> {
        self.generate_series_until(c01, big_n, big_m, None)
    }

    pub(crate) fn generate_series_until(
        &self,
        c01: &S,
        big_n: usize,
        big_m: usize,
        deadline: Option<Instant>,
    ) -> Result<BivSeries<S>> {
        let mut c = vec![vec![S::zero(); big_m + 1]; big_n + 1];
        for n in 0..=big_n {
            if deadline.is_some_and(|d| Instant::now() > d) {
                return Err(PadeError::Timeout);
            }
            for m in 0..=big_m {
                if (n, m) == (0, 0) {
                    continue;
                }
                if (n, m) == (0, 1) {
                    c[0][1] = c01.clone();
                    continue;
                }
                let mut acc = S::zero();
                for i in 0..=n {
                    for j in 0..=m {
                        if (i, j) == (0, 0) || (i, j) == (n, m) {
                            continue;
                        }
                        let (a, b) = (&c[i][j], &c[n - i][m - j]);
                        if a.is_zero() || b.is_zero() {
                            continue;
                        }
                        acc = acc + a.clone() * b;
                    }
                }
                let mut rhs = -(self.beta.clone() * acc);
                if (n, m) == (1, 0) {
                    rhs = rhs - &self.alpha;
                }
                let lhs = S::from_usize(n) + S::from_i64(m as i64 - 1) * &self.beta;
                if lhs.is_zero() {
                    return Err(PadeError::Resonance { n, m });
                }
                c[n][m] = rhs / lhs;
            }
        }
        BivSeries::new(c)
    }

    /// `c[k][0]`, `k = 0..=big_n`; independent of `c01`.
    pub fn x_axis_coeffs(&self, big_n: usize) -> Result<Vec<S>> {
        let s = self.generate_series(&S::zero(), big_n, 0)?;
        Ok(s.x_coeffs(0, big_n))
    }

    /// `c[1][0] = alpha / (beta - 1)`.
    pub fn c10(&self) -> S {
        self.alpha.clone() / (self.beta.clone() - S::one())
    }

    /// `c[2][0] = -beta c10^2 / (2 - beta)`.
    pub fn c20(&self) -> S {
        let c10 = self.c10();
        -(self.beta.clone() * &c10 * c10) / (S::from_i64(2) - &self.beta)
    }
}
