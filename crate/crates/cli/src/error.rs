use serde_json::{json, Value};
use strata_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// Unreadable files and malformed documents.
    #[error("{0}")]
    Input(String),

    #[error("stratum {0} is empty")]
    EmptyStratum(String),

    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Input(_) => 2,
            CliError::Core(Error::MalformedStratum(_) | Error::MalformedInput(_)) => 2,
            CliError::Core(Error::RetryCapExceeded { .. }) => 4,
            CliError::EmptyStratum(_) | CliError::Core(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse",
            CliError::Input(_) => "input",
            CliError::EmptyStratum(_) => "empty_stratum",
            CliError::Core(e) => match e {
                Error::MalformedStratum(_) => "malformed_stratum",
                Error::MalformedInput(_) => "malformed_input",
                Error::UnsupportedK(_) => "unsupported_k",
                Error::UnsupportedPattern(_) => "unsupported_pattern",
                Error::WrongGenus { .. } => "wrong_genus",
                Error::DegenerateVariable { .. } => "degenerate_variable",
                Error::UnsatisfiableVertex { .. } => "unsatisfiable_vertex",
                Error::RetryCapExceeded { .. } => "retry_cap_exceeded",
                Error::InvalidBeta { .. } => "invalid_beta",
                Error::NotIrreducible => "not_irreducible",
                Error::NotApplicable(_) => "not_applicable",
            },
        }
    }

    pub fn to_json(&self) -> Value {
        let mut body = json!({
            "kind": self.kind(),
            "message": self.to_string(),
            "exit_code": self.exit_code(),
        });
        if let CliError::Parse { position, .. } = self {
            body["position"] = json!(position);
        }
        json!({ "error": body })
    }
}
