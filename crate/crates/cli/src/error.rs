use std::process::ExitCode;

use isored_core::cospec::CospecError;
use isored_core::graphs::GraphError;
use isored_core::latency::LatencyError;
use isored_core::reduce::ReduceError;
use isored_core::unpack::UnpackError;
use thiserror::Error;

/// Failure classes, each with its own process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input, bad arguments (exit 1).
    #[error("input error: {0}")]
    Input(String),
    /// Well-formed input that violates an operation's precondition (exit 2).
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An internal consistency check failed (exit 3).
    #[error("internal failure: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Input(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Internal(_) => 3,
        })
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::EmptySet | GraphError::DeletingAll => CliError::Precondition(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ReduceError> for CliError {
    fn from(e: ReduceError) -> Self {
        match e {
            ReduceError::Graph(g) => g.into(),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<CospecError> for CliError {
    fn from(e: CospecError) -> Self {
        match e {
            CospecError::RoutesDisagree(..) => CliError::Internal(e.to_string()),
            CospecError::Reduce(r) => r.into(),
            CospecError::Graph(g) => g.into(),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<LatencyError> for CliError {
    fn from(e: LatencyError) -> Self {
        match e {
            LatencyError::Cospec(c) => c.into(),
            LatencyError::Reduce(r) => r.into(),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<UnpackError> for CliError {
    fn from(e: UnpackError) -> Self {
        match e {
            UnpackError::Graph(g) => g.into(),
            _ => CliError::Precondition(e.to_string()),
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
        CliError::Input(e.to_string())
    }
}
