//! Scalar field abstraction, dense polynomials, small linear solves.

mod linsolve;
mod poly;
mod scalar;

pub use linsolve::{solve, solve_pinned, SolveError};
pub use poly::Poly;
pub use scalar::{factorial, parse_rational, pochhammer, powi, Rational, Scalar};
