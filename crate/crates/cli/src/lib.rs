//! Command implementations behind the `hazcell` binary, exposed as a library
//! so integration tests can drive them directly.

pub mod asc;
pub mod assess;
pub mod load;
pub mod report;
pub mod validate;

use std::fmt;

/// Exit-code bearing error: validation problems exit 2, runtime failures
/// (I/O on outputs and the like) exit 1.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) | CliError::Runtime(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<hazcell_core::engine::EngineError> for CliError {
    fn from(e: hazcell_core::engine::EngineError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<hazcell_core::ingest::IngestError> for CliError {
    fn from(e: hazcell_core::ingest::IngestError) -> Self {
        CliError::Validation(e.to_string())
    }
}

/// Wraps output-side I/O errors as runtime failures.
pub fn runtime_io<T>(result: std::io::Result<T>, what: &str) -> Result<T, CliError> {
    result.map_err(|e| CliError::Runtime(format!("{what}: {e}")))
}
