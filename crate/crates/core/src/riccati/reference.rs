//! Reference values of `c01` and the closed-form solution.
//!
//! The solution vanishing at `x = 1` is
//! `w = z / (2 beta) (J_{beta-1}(z) - C Y_{beta-1}(z)) / (J_beta(z) - C Y_beta(z))`
//! with `z = 2 sqrt(alpha beta x)` and `C = J_{beta-1}(z1) / Y_{beta-1}(z1)`, `z1 = 2 sqrt(alpha beta)`.

use std::f64::consts::PI;

use super::RiccatiProblem;
use crate::algebra::Scalar;
use crate::error::{PadeError, Result};
use crate::special::{bessel_j, bessel_y, gamma, pochhammer};

/// `sum_k (-t)^k / (k! (nu+1)_k)`, summed until the terms drop below `tol`
/// (relative to the leading term) and past the largest term.
fn hyp0f1<S: Scalar>(nu: &S, t: &S, tol: f64) -> Result<S> {
    let mut term = S::one();
    let mut sum = S::one();
    let peak = t.to_f64().abs().sqrt();
    for k in 1..10_000usize {
        let d = S::from_usize(k) * (nu.clone() + S::from_usize(k));
        if d.is_zero() {
            return Err(PadeError::Domain(format!("0F1 parameter {nu} is a non-positive integer")));
        }
        term = -(term * t) / d;
        sum = sum + &term;
        if (k as f64) > peak && term.magnitude() < tol {
            return Ok(sum);
        }
    }
    Err(PadeError::Domain("0F1 series did not converge".into()))
}

impl<S: Scalar> RiccatiProblem<S> {
    /// `c01` of the solution with `w(1) = 0`, as a ratio of two `0F1` series:
    /// `alpha / (1 - beta) * S(1 - beta) / S(beta - 1)` at `t = alpha beta`.
    ///
    /// In exact arithmetic the truncation error is below `1e-90`.
    pub fn reference_c01(&self) -> Result<S> {
        let tol = if S::EXACT { 1e-90 } else { 1e-18 };
        let t = self.alpha.clone() * &self.beta;
        let one = S::one();
        let top = hyp0f1(&(one.clone() - &self.beta), &t, tol)?;
        let bottom = hyp0f1(&(self.beta.clone() - &one), &t, tol)?;
        if bottom.is_zero() {
            return Err(PadeError::Domain("reference c01 is infinite".into()));
        }
        Ok(self.alpha.clone() / (one - &self.beta) * top / bottom)
    }
}

/// Bessel-function form of the solution in double precision.
#[derive(Clone, Debug, PartialEq)]
pub struct BesselReference {
    pub alpha: f64,
    pub beta: f64,
    /// `C = J_{beta-1}(z1) / Y_{beta-1}(z1)`.
    pub c: f64,
}

/// Coefficients of `w = (sum a0_m x^m + y sum a1_m x^m) / (1 + sum b0_m x^m + y sum b1_m x^m)`,
/// `y = x^beta`, index `m = 0..terms`; `a0[0] = b0[0] = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFormCoeffs {
    pub a0: Vec<f64>,
    pub b0: Vec<f64>,
    pub a1: Vec<f64>,
    pub b1: Vec<f64>,
}

impl BesselReference {
    pub fn new<S: Scalar>(problem: &RiccatiProblem<S>) -> Result<Self> {
        let (alpha, beta) = (problem.alpha.to_f64(), problem.beta.to_f64());
        let z1 = 2.0 * (alpha * beta).sqrt();
        let y = bessel_y(beta - 1.0, z1)?;
        if y == 0.0 {
            return Err(PadeError::Domain("Y_{beta-1}(z1) vanishes".into()));
        }
        let c = bessel_j(beta - 1.0, z1)? / y;
        Ok(BesselReference { alpha, beta, c })
    }

    fn common(&self) -> Result<f64> {
        let b = self.beta;
        Ok(PI * (1.0 / gamma(b)? + self.c * gamma(1.0 - b)? * ((b - 1.0) * PI).cos() / PI) / (self.c * gamma(b)?))
    }

    /// `a_{0,1} = pi (1/Gamma(beta) + C Gamma(1-beta) cos((beta-1) pi)/pi) (alpha beta)^beta / (beta C Gamma(beta))`.
    pub fn exact_c01(&self) -> Result<f64> {
        Ok(self.common()? * (self.alpha * self.beta).powf(self.beta) / self.beta)
    }

    /// `w(x)` for `x > 0`.
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        if x <= 0.0 {
            return Err(PadeError::Domain(format!("x must be positive, got {x}")));
        }
        let b = self.beta;
        let z = 2.0 * (self.alpha * b * x).sqrt();
        let num = bessel_j(b - 1.0, z)? - self.c * bessel_y(b - 1.0, z)?;
        let den = bessel_j(b, z)? - self.c * bessel_y(b, z)?;
        if den == 0.0 {
            return Err(PadeError::Pole { x: x.to_string(), y: x.powf(b).to_string() });
        }
        Ok(z / (2.0 * b) * num / den)
    }

    pub fn rational_form_coeffs(&self, terms: usize) -> Result<RationalFormCoeffs> {
        let (a, b) = (self.alpha, self.beta);
        let ab = a * b;
        let fact = |m: usize| (1..=m).fold(1.0, |acc, k| acc * k as f64);
        let sign = |m: usize| if m % 2 == 0 { 1.0 } else { -1.0 };
        let mut out = RationalFormCoeffs { a0: vec![0.0], b0: vec![0.0], a1: Vec::new(), b1: Vec::new() };
        for m in 1..terms {
            out.a0.push(-sign(m) * ab.powi(m as i32) / (fact(m - 1) * pochhammer(-b, m + 1)));
            out.b0.push(sign(m) * ab.powi(m as i32) / (fact(m) * pochhammer(1.0 - b, m)));
        }
        let ca = self.common()?;
        let cb = PI * (1.0 / gamma(b + 1.0)? + self.c * gamma(-b)? * (b * PI).cos() / PI) / (self.c * gamma(b)?);
        for m in 0..terms {
            let scale = sign(m) * ab.powf(m as f64 + b) / fact(m);
            out.a1.push(ca * scale / (b * pochhammer(b, m)));
            out.b1.push(cb * scale / pochhammer(b + 1.0, m));
        }
        Ok(out)
    }
}

/// `c01` of the solution with `w(1) = 0`, in double precision from the Bessel form.
pub fn exact_c01<S: Scalar>(problem: &RiccatiProblem<S>) -> Result<f64> {
    BesselReference::new(problem)?.exact_c01()
}

/// The solution with `w(0) = w(1) = 0` at `0 < x <= 1`.
pub fn evaluate_bessel_solution<S: Scalar>(problem: &RiccatiProblem<S>, x: f64) -> Result<f64> {
    BesselReference::new(problem)?.evaluate(x)
}
