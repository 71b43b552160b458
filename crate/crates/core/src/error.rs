use thiserror::Error;

/// Errors surfaced by constructors and operations.
///
/// Validation is strict: every constructor re-checks the algebraic laws its
/// output is supposed to satisfy, and a violation is an error, not a warning.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: String,
        got: String,
    },

    #[error("operands live over different prime fields")]
    FieldMismatch,

    #[error("differential does not square to zero at degree {degree}")]
    DifferentialSquare { degree: usize },

    #[error("map does not commute with differentials at degree {degree}")]
    NotChainMap { degree: usize },

    #[error("homotopy identity fails at degree {degree}")]
    NotHomotopy { degree: usize },

    #[error("lifting square does not commute")]
    SquareDoesNotCommute,

    #[error("homotopy endpoint mismatch: {0}")]
    EndpointMismatch(&'static str),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("colimit failed to stabilize at stage {stage} (level {level})")]
    UnstableColimit { level: usize, stage: usize },

    #[error("symmetric group action is invalid: {0}")]
    BadGroupAction(String),

    #[error("suspension object must be one generator in a single degree for this operation")]
    NonSphericalSuspension,

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    pub fn dim(context: &'static str, expected: impl ToString, got: impl ToString) -> Self {
        Error::DimensionMismatch {
            context,
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}
