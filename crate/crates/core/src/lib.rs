//! Jacobi-type recursions for univariate and bivariate Padé approximants,
//! with a closed-form specialization for a Riccati equation.

pub mod algebra;
pub mod bivariate;
pub mod error;
pub mod level;
pub mod remainder;
pub mod riccati;
pub mod series;
pub mod special;
pub mod univariate;

pub use algebra::{Poly, Rational, Scalar};
pub use error::{PadeError, Result};
pub use level::{Level, UniPade};
pub use series::{required_orders, BivSeries};
pub use univariate::{jacobi_pade, oracle_pade, JacobiTrace};
pub use bivariate::{
    left_pade, left_pade_with_seeds, oracle_left_pade, oracle_right_pade, right_pade, BivPade, Degeneracy, Seeds, Side,
};
pub use riccati::{Algorithm, RiccatiProblem, UniAlgorithm};
