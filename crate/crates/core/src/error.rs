use thiserror::Error;

/// Everything that can go wrong while building an approximant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadeError {
    #[error("non-normal series: c[1][0] = 0, the Jacobi recursion is undefined")]
    NonNormalSeries,

    #[error("non-normal seed axis: the univariate [{m}/{m}] in y does not exist")]
    NonNormalSeeds { m: usize },

    #[error("degenerate Jacobi step at level {n}: pivot {what} vanishes")]
    DegenerateLevel { n: usize, what: &'static str },

    #[error("non-normal table: singular linear system for [{n}/{n}]")]
    SingularUnivariate { n: usize },

    #[error("degenerate remainder operator at level {n}")]
    DegenerateRemainder { n: usize },

    #[error("non-normal bivariate table: singular system at (n={n}, m={m}, p={p})")]
    SingularBivariate { n: usize, m: usize, p: usize },

    #[error("series too short: need N >= {need_n}, M >= {need_m}, have N = {have_n}, M = {have_m}")]
    InsufficientOrder {
        need_n: usize,
        need_m: usize,
        have_n: usize,
        have_m: usize,
    },

    #[error("malformed series: {0}")]
    MalformedSeries(String),

    #[error("denominator vanishes at ({x}, {y})")]
    Pole { x: String, y: String },

    #[error("resonance: n + (m-1)*beta = 0 at (n={n}, m={m})")]
    Resonance { n: usize, m: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} has a vanishing denominator at n={n}, k={k}")]
    ZeroDenominator { what: &'static str, n: usize, k: usize },

    #[error("special function domain error: {0}")]
    Domain(String),

    #[error("deadline exceeded")]
    Timeout,
}

pub type Result<T> = std::result::Result<T, PadeError>;
