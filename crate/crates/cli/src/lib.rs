//! Library half of the `ncdet` command-line tool: job description, the
//! runner, and the output documents. `main` only parses arguments and maps
//! the outcome to an exit code, so everything here is testable in-process.
//!
//! Exit codes: `0` success, `2` parse or usage error, `3` precondition
//! violation (singular matrix, shape or index problems, non-Hermitian
//! input, refused enumeration, elimination stall), `4` undefined
//! quasideterminant (the output document carries the witness), `5` internal
//! disagreement between independent computation routes (also used for a
//! failed verification battery).

pub mod job;
pub mod output;
pub mod run;

pub use job::{Command, JobSpec, Method};
pub use run::{exit_code_for, run, CliError};
