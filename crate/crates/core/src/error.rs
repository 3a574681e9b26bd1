use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed stratum: {0}")]
    MalformedStratum(String),

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("operation supports k in {{1, 2}} only, got k = {0}")]
    UnsupportedK(u32),

    #[error("operation not defined for this pattern: {0}")]
    UnsupportedPattern(String),

    #[error("operation requires genus {expected}, stratum has genus {actual}")]
    WrongGenus { expected: u32, actual: u32 },

    #[error("variable {variable} vanishes on every solution of the residue system")]
    DegenerateVariable { variable: String },

    #[error("vertex {vertex} cannot meet the residue realizability condition")]
    UnsatisfiableVertex { vertex: usize },

    #[error("no certificate after {attempts} attempts")]
    RetryCapExceeded { attempts: u32 },

    #[error("boundary number {beta} is smaller than the pole count {poles}")]
    InvalidBeta { beta: u64, poles: usize },

    #[error("stratum is not irreducible")]
    NotIrreducible,

    #[error("not applicable: {0}")]
    NotApplicable(String),
}
