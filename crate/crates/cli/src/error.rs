use std::fmt;

use pade_core::PadeError;

/// A failure with its process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, unreadable or malformed files, insufficient orders (exit 2).
    Input(String),
    /// Non-normal data or a vanishing pivot (exit 3).
    Degenerate(String),
    /// `--check` found a mismatch (exit 4).
    Check(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Degenerate(_) => 3,
            CliError::Check(_) => 4,
        }
    }

    /// Degeneracy message naming the table position `(n, m, p)` when the
    /// failure itself does not carry it.
    pub fn at(e: PadeError, n: usize, m: usize) -> Self {
        match e {
            PadeError::NonNormalSeries | PadeError::DegenerateLevel { .. } | PadeError::DegenerateRemainder { .. } => {
                CliError::Degenerate(format!("degenerate table at (n={n}, m={m}, p=0): {e}"))
            }
            PadeError::NonNormalSeeds { .. } => {
                CliError::Degenerate(format!("degenerate table at (n=0, m={m}, p={m}): {e}"))
            }
            other => other.into(),
        }
    }
}

impl From<PadeError> for CliError {
    fn from(e: PadeError) -> Self {
        match e {
            PadeError::InsufficientOrder { .. }
            | PadeError::MalformedSeries(_)
            | PadeError::InvalidParameter(_)
            | PadeError::Resonance { .. }
            | PadeError::Domain(_) => CliError::Input(e.to_string()),
            _ => CliError::Degenerate(e.to_string()),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Degenerate(m) | CliError::Check(m) => f.write_str(m),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
