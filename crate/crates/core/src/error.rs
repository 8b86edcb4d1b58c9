use thiserror::Error;

/// Errors raised by the algebraic and combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },

    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("singular coordinate change")]
    SingularMatrix,

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("step cap of {cap} exceeded in {context}")]
    StepCap { cap: u64, context: &'static str },

    #[error("ideal is not primary to the maximal ideal at power {power}")]
    NotMPrimary { power: usize },

    #[error("finite differences did not stabilise within {cap} powers")]
    NoStabilization { cap: usize },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Process exit code used by the command-line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::UnknownVariable { .. }
            | Error::NvarsMismatch { .. }
            | Error::Invalid(_)
            | Error::SingularMatrix => 2,
            Error::Unsupported(_) | Error::StepCap { .. } | Error::NotMPrimary { .. } => 3,
            Error::NoStabilization { .. } | Error::Numerical(_) | Error::Inconsistent(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
