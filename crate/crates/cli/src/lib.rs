//! Command-line front end and verification suites for `germlab`.

pub mod commands;
pub mod config;
pub mod report;
pub mod suites;

pub use commands::{run, Cli, Command, GlobalOpts, Output};
pub use config::RunConfig;
pub use report::{Report, VerificationCase};
pub use suites::{verify, Suite};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] germlab::Error),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => e.exit_code(),
            CliError::Config(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}
