//! Exit-code policy: malformed input and bad parameters exit 1; failures
//! of a certified computation (budget blown, cap violated) exit 2.

use std::fmt;

use ktors::bounds::BoundsError;
use ktors::exact_linalg::LinalgError;
use ktors::numberfield::NumberFieldError;
use ktors::simplicial::SimplicialError;

#[derive(Debug)]
pub enum CliError {
    /// The user supplied something unusable: unreadable file, malformed
    /// JSON, out-of-range flag value.
    Input(String),
    /// The computation itself could not be certified: a resource budget
    /// or a proven cap was exceeded.
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Invariant(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Invariant(msg) => write!(f, "invariant violation: {msg}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("malformed input file: {e}"))
    }
}

impl From<LinalgError> for CliError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::ResourceBudget { .. } => CliError::Invariant(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<SimplicialError> for CliError {
    fn from(e: SimplicialError) -> Self {
        match e {
            SimplicialError::Linalg(inner) => inner.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<NumberFieldError> for CliError {
    fn from(e: NumberFieldError) -> Self {
        match e {
            NumberFieldError::LogNonPositive { .. }
            | NumberFieldError::ZetaCapExceeded { .. } => {
                CliError::Invariant(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::NumberField(inner) => inner.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}
