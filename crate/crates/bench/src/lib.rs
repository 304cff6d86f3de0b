//! Shared inputs for the criterion benches.

use pade_core::{Rational, RiccatiProblem, Scalar};

/// `(alpha, beta) = (1, 1/2)` in exact arithmetic.
pub fn demo_problem() -> RiccatiProblem<Rational> {
    RiccatiProblem::new(Rational::from_i64(1), Rational::from_ratio(1, 2)).expect("valid parameters")
}

/// The same problem in double precision.
pub fn demo_problem_f64() -> RiccatiProblem<f64> {
    RiccatiProblem::new(1.0, 0.5).expect("valid parameters")
}
