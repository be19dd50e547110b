//! Library half of the `perfbase` command-line tool.
//!
//! [`cert`] defines the versioned JSON certificate and its independent
//! re-verification, [`commands`] turns parsed arguments into certificates
//! and verdicts, and [`fixtures`] lists the reference certificates shipped
//! in the repository's `fixtures/` directory.
//!
//! Exit codes: 0 success, 1 failed verification, 2 invalid input,
//! 3 search guard exceeded.

pub mod args;
pub mod cert;
pub mod commands;
pub mod fixtures;

use perfbase_construct::ConstructError;
use perfbase_exactla::LinAlgError;
use perfbase_gf::GfError;
use perfbase_rmcode::RmError;
use perfbase_tensor3::TensorError;

pub use args::Cli;
pub use cert::{verify_certificate, Certificate, VerifyOutcome};
pub use commands::{run, Outcome};

/// Failure of a command, classified by exit code.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("search guard of {guard} steps exceeded; raise PERFBASE_GUARD")]
    Guard { guard: u64 },
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> CliError {
        CliError::Invalid(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Guard { .. } => 3,
        }
    }
}

impl From<GfError> for CliError {
    fn from(e: GfError) -> CliError {
        CliError::Invalid(e.to_string())
    }
}

impl From<LinAlgError> for CliError {
    fn from(e: LinAlgError) -> CliError {
        CliError::Invalid(e.to_string())
    }
}

impl From<TensorError> for CliError {
    fn from(e: TensorError) -> CliError {
        match e {
            TensorError::GuardExceeded { guard } => CliError::Guard { guard },
            e => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> CliError {
        match e {
            ConstructError::VerificationFailed(why) => CliError::Verification(why),
            ConstructError::Tensor(e) => e.into(),
            e => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<RmError> for CliError {
    fn from(e: RmError) -> CliError {
        match e {
            RmError::GuardExceeded { guard } => CliError::Guard { guard },
            RmError::InvalidWitness(why) | RmError::NotABase(why) => CliError::Verification(why),
            RmError::Construct(e) => e.into(),
            RmError::Tensor(e) => e.into(),
            e => CliError::Invalid(e.to_string()),
        }
    }
}
