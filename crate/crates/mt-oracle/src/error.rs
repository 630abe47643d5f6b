use thiserror::Error;

/// Crate-wide error type. Every fallible operation returns one of these;
/// the CLI maps variants onto process exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("vector is not in the adjoint cocharacter lattice: {0}")]
    NotInLattice(String),

    #[error("no compact maximal torus")]
    NoCompactMaximalTorus,

    #[error("invalid Vogan diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("invalid Galois module: {0}")]
    InvalidGaloisModule(String),

    #[error("complex conjugation acts trivially; the Serre-group comparison needs a non-trivial conjugation")]
    TrivialConjugation,

    #[error("invalid group spec ({field}): {message}")]
    InvalidSpec { field: String, message: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("preset `{name}` is not defined for {family}{rank}: {reason}")]
    PresetNotApplicable {
        name: String,
        family: String,
        rank: usize,
        reason: String,
    },
}

impl Error {
    pub fn spec(field: &str, message: impl Into<String>) -> Self {
        Error::InvalidSpec { field: field.to_string(), message: message.into() }
    }

    /// Process exit code the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NoCompactMaximalTorus => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
