//! Command-line tooling around `numon-core`: verification suites, parallel
//! checkpointed searches over Kunz coordinates, and JSON/CSV output.

pub mod checkpoint;
pub mod cli;
pub mod output;
pub mod parse;
pub mod search;
pub mod verify;

/// Why a command did not succeed; maps onto the process exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or input data.
    Usage(String),
    /// A resource cap was exceeded.
    Resource(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Resource(_) => 4,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "error: {msg}"),
            Failure::Resource(msg) => write!(f, "resource limit: {msg}"),
        }
    }
}

impl From<numon_core::IdealError> for Failure {
    fn from(err: numon_core::IdealError) -> Self {
        match err {
            numon_core::IdealError::ResourceLimit(_) => Failure::Resource(err.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure::Usage(err.to_string())
    }
}
