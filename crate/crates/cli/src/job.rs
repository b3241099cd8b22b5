//! The job description assembled from command-line arguments.
//!
//! Indices on the command line are 1-based, matching the written
//! convention; this module is the single place where they are converted to
//! the library's 0-based indexing.

use std::path::PathBuf;

use ncdet_core::io::Side;
use ncdet_verify::Scale;

/// Which operation to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Rdet,
    Cdet,
    Mdet,
    Ddet,
    Inverse,
    Solve,
    Quasidet,
    Qsolve,
    Rank,
    Verify,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Rdet => "rdet",
            Command::Cdet => "cdet",
            Command::Mdet => "mdet",
            Command::Ddet => "ddet",
            Command::Inverse => "inverse",
            Command::Solve => "solve",
            Command::Quasidet => "quasidet",
            Command::Qsolve => "qsolve",
            Command::Rank => "rank",
            Command::Verify => "verify",
        }
    }
}

/// Solution method for `solve`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Cramer,
    Inverse,
    Quasi,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Cramer => "cramer",
            Method::Inverse => "inverse",
            Method::Quasi => "quasi",
        }
    }
}

/// One fully described job. Index fields hold 1-based values exactly as
/// given on the command line.
#[derive(Debug, Clone)]
pub struct JobSpec {
    pub command: Command,
    /// Input path; `None` only for `verify`.
    pub input: Option<PathBuf>,
    pub i: Option<usize>,
    pub j: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    /// For `solve`: side override, checked against the system document.
    pub side: Option<Side>,
    pub method: Method,
    /// Worker threads for permutation sums.
    pub parallel: usize,
    /// Raise the `n!`-enumeration refusal bound.
    pub max_enum_dim: Option<usize>,
    /// Verification scale.
    pub scale: Scale,
    /// Verification seed (already resolved from flag/environment).
    pub seed: u64,
    /// Output file; standard output when absent.
    pub output: Option<PathBuf>,
}

impl JobSpec {
    pub fn new(command: Command) -> Self {
        JobSpec {
            command,
            input: None,
            i: None,
            j: None,
            p: None,
            q: None,
            side: None,
            method: Method::default(),
            parallel: 1,
            max_enum_dim: None,
            scale: Scale::Small,
            seed: DEFAULT_VERIFY_SEED,
            output: None,
        }
    }
}

/// Seed used by `verify` unless overridden by `NCDET_SEED`.
pub const DEFAULT_VERIFY_SEED: u64 = 42;
