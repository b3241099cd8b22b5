//! Executes a [`JobSpec`] and produces the output document plus the process
//! exit code.

use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use ncdet_core::io::{parse_qmat, parse_qsys, Side, System};
use ncdet_core::perm::factorial;
use ncdet_core::quasidet::{quasi_solve, quasi_solve_left, quasideterminant_opt, QuasiResult};
use ncdet_core::rcdet::{
    cdet_opt, ddet_opt, hermitian_det_opt, inverse_opt, mdet_opt, rank, rdet_opt, solve_left_opt,
    solve_right_opt, DetOptions,
};
use ncdet_core::{Error, QMatrix};
use ncdet_verify::run_all;

use crate::job::{Command, JobSpec, Method};
use crate::output::{
    algebra_echo, battery_echo, matrix_rows, vector_entries, InputEcho, OutputDoc, ResultBody,
};

/// A failed run: message for standard error plus the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: i32,
}

impl CliError {
    fn new(message: impl Into<String>, code: i32) -> Self {
        CliError {
            message: message.into(),
            code,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::new(e.to_string(), exit_code_for(&e))
    }
}

/// Exit-code contract for library errors: parse problems are `2`,
/// precondition violations `3`, and internal disagreements `5`.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::Ragged
        | Error::DegenerateAlgebra
        | Error::BackendMismatch
        | Error::AlgebraMismatch { .. } => 2,
        Error::InternalDisagreement { .. } => 5,
        Error::NotSquare { .. }
        | Error::IndexOutOfRange { .. }
        | Error::NotHermitian
        | Error::SingularMatrix
        | Error::NotInvertible { .. }
        | Error::EnumerationTooLarge { .. }
        | Error::EliminationStall { .. }
        | Error::EmptyResult
        | Error::UndefinedEntry { .. }
        | Error::UndefinedBlock { .. }
        | Error::InvalidPermutation { .. } => 3,
    }
}

fn read_input(path: &Path) -> Result<(String, InputEcho), CliError> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::new(format!("cannot read {}: {e}", path.display()), 2))?;
    let digest = hex_digest(&bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| CliError::new(format!("{} is not UTF-8", path.display()), 2))?;
    Ok((
        text,
        InputEcho {
            path: path.display().to_string(),
            sha256: digest,
        },
    ))
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    let mut hex = String::with_capacity(out.len() * 2);
    for b in out {
        hex.push_str(&format!("{b:02x}"));
    }
    hex
}

/// 1-based command-line index to 0-based library index.
fn to_zero_based(value: usize, bound: usize, what: &str) -> Result<usize, CliError> {
    if value == 0 || value > bound {
        return Err(CliError::new(
            format!("{what} must be between 1 and {bound}, got {value}"),
            3,
        ));
    }
    Ok(value - 1)
}

fn det_options(spec: &JobSpec) -> DetOptions {
    let mut opts = DetOptions::default().with_workers(spec.parallel.max(1));
    if let Some(max) = spec.max_enum_dim {
        opts = opts.with_max_enum_dim(max);
    }
    opts
}

fn load_matrix(spec: &JobSpec) -> Result<(QMatrix, InputEcho), CliError> {
    let path = spec
        .input
        .as_ref()
        .ok_or_else(|| CliError::new("an input file is required", 2))?;
    let (text, echo) = read_input(path)?;
    let m = parse_qmat(&text)?;
    Ok((m, echo))
}

fn load_system(spec: &JobSpec) -> Result<(System, InputEcho), CliError> {
    let path = spec
        .input
        .as_ref()
        .ok_or_else(|| CliError::new("an input file is required", 2))?;
    let (text, echo) = read_input(path)?;
    let sys = parse_qsys(&text)?;
    if let Some(side) = spec.side {
        if side != sys.side {
            return Err(CliError::new(
                format!(
                    "--side {} contradicts the document's side {}",
                    side.as_str(),
                    sys.side.as_str()
                ),
                2,
            ));
        }
    }
    Ok((sys, echo))
}

/// Runs the job. `Ok` carries the document and the exit code (nonzero for
/// an undefined quasideterminant or a failed verification battery).
pub fn run(spec: &JobSpec) -> Result<(OutputDoc, i32), CliError> {
    match spec.command {
        Command::Rdet | Command::Cdet => {
            let (m, echo) = load_matrix(spec)?;
            let opts = det_options(spec);
            let (value, index) = if spec.command == Command::Rdet {
                let i = to_zero_based(spec.i.ok_or_else(|| missing("-i"))?, m.rows(), "-i")?;
                (rdet_opt(&m, i, &opts)?, i + 1)
            } else {
                let j = to_zero_based(spec.j.ok_or_else(|| missing("-j"))?, m.cols(), "-j")?;
                (cdet_opt(&m, j, &opts)?, j + 1)
            };
            let doc = OutputDoc {
                command: spec.command.as_str().to_string(),
                input: Some(echo),
                algebra: Some(algebra_echo(&m)),
                scalar: Some(m.params().kind().as_str().to_string()),
                result: ResultBody::Det {
                    value: value.to_string(),
                    index: Some(index),
                    monomials: factorial(m.rows()),
                },
            };
            Ok((doc, 0))
        }
        Command::Mdet => {
            let (m, echo) = load_matrix(spec)?;
            let value = mdet_opt(&m, &det_options(spec))?;
            let doc = OutputDoc {
                command: "mdet".to_string(),
                input: Some(echo),
                algebra: Some(algebra_echo(&m)),
                scalar: Some(m.params().kind().as_str().to_string()),
                result: ResultBody::Det {
                    value: value.to_string(),
                    index: None,
                    monomials: factorial(m.rows()),
                },
            };
            Ok((doc, 0))
        }
        Command::Ddet => {
            let (m, echo) = load_matrix(spec)?;
            let value = ddet_opt(&m, &det_options(spec))?;
            let doc = OutputDoc {
                command: "ddet".to_string(),
                input: Some(echo),
                algebra: Some(algebra_echo(&m)),
                scalar: Some(m.params().kind().as_str().to_string()),
                result: ResultBody::Scalar {
                    value: value.to_string(),
                },
            };
            Ok((doc, 0))
        }
        Command::Inverse => {
            let (m, echo) = load_matrix(spec)?;
            let inv = inverse_opt(&m, &det_options(spec))?;
            let doc = OutputDoc {
                command: "inverse".to_string(),
                input: Some(echo),
                algebra: Some(algebra_echo(&m)),
                scalar: Some(m.params().kind().as_str().to_string()),
                result: ResultBody::Matrix {
                    matrix: matrix_rows(&inv),
                },
            };
            Ok((doc, 0))
        }
        Command::Solve => {
            let (sys, echo) = load_system(spec)?;
            let opts = det_options(spec);
            let solution = match (sys.side, spec.method) {
                (Side::Right, Method::Cramer) => solve_right_opt(&sys.a, &sys.y, &opts)?,
                (Side::Right, Method::Inverse) => {
                    inverse_opt(&sys.a, &opts)?.matmul(&sys.y)?
                }
                (Side::Right, Method::Quasi) => quasi_solve(&sys.a, &sys.y)?,
                (Side::Left, Method::Cramer) => solve_left_opt(&sys.a, &sys.y, &opts)?,
                (Side::Left, Method::Inverse) => {
                    sys.y.matmul(&inverse_opt(&sys.a, &opts)?)?
                }
                (Side::Left, Method::Quasi) => quasi_solve_left(&sys.a, &sys.y)?,
            };
            let doc = OutputDoc {
                command: "solve".to_string(),
                input: Some(echo),
                algebra: Some(algebra_echo(&sys.a)),
                scalar: Some(sys.a.params().kind().as_str().to_string()),
                result: ResultBody::Solution {
                    side: sys.side.as_str().to_string(),
                    method: spec.method.as_str().to_string(),
                    solution: vector_entries(&solution),
                },
            };
            Ok((doc, 0))
        }
        Command::Qsolve => {
            let (sys, echo) = load_system(spec)?;
            let solution = match sys.side {
                Side::Right => quasi_solve(&sys.a, &sys.y)?,
                Side::Left => quasi_solve_left(&sys.a, &sys.y)?,
            };
            let doc = OutputDoc {
                command: "qsolve".to_string(),
                input: Some(echo),
                algebra: Some(algebra_echo(&sys.a)),
                scalar: Some(sys.a.params().kind().as_str().to_string()),
                result: ResultBody::Solution {
                    side: sys.side.as_str().to_string(),
                    method: Method::Quasi.as_str().to_string(),
                    solution: vector_entries(&solution),
                },
            };
            Ok((doc, 0))
        }
        Command::Quasidet => {
            let (m, echo) = load_matrix(spec)?;
            let p = to_zero_based(spec.p.ok_or_else(|| missing("-p"))?, m.rows(), "-p")?;
            let q = to_zero_based(spec.q.ok_or_else(|| missing("-q"))?, m.cols(), "-q")?;
            let result = quasideterminant_opt(&m, p, q, &det_options(spec))?;
            let (body, code) = match result {
                QuasiResult::Defined(v) => (
                    ResultBody::Quasidet {
                        defined: true,
                        value: Some(v.to_string()),
                        witness: None,
                        p: p + 1,
                        q: q + 1,
                    },
                    0,
                ),
                QuasiResult::Undefined(w) => (
                    ResultBody::Quasidet {
                        defined: false,
                        value: None,
                        witness: Some(w.to_string()),
                        p: p + 1,
                        q: q + 1,
                    },
                    4,
                ),
            };
            let doc = OutputDoc {
                command: "quasidet".to_string(),
                input: Some(echo),
                algebra: Some(algebra_echo(&m)),
                scalar: Some(m.params().kind().as_str().to_string()),
                result: body,
            };
            Ok((doc, code))
        }
        Command::Rank => {
            let (m, echo) = load_matrix(spec)?;
            let value = rank(&m)?;
            let doc = OutputDoc {
                command: "rank".to_string(),
                input: Some(echo),
                algebra: Some(algebra_echo(&m)),
                scalar: Some(m.params().kind().as_str().to_string()),
                result: ResultBody::Rank { rank: value },
            };
            Ok((doc, 0))
        }
        Command::Verify => {
            let report = run_all(spec.scale, spec.seed, spec.parallel.max(1));
            // Emit reproducer files for failed suites before reporting.
            for suite in &report.suites {
                if let Some(repro) = &suite.reproducer {
                    fs::write(&repro.file_name, &repro.contents).map_err(|e| {
                        CliError::new(
                            format!("cannot write reproducer {}: {e}", repro.file_name),
                            5,
                        )
                    })?;
                }
            }
            let code = if report.all_passed() { 0 } else { 5 };
            let doc = OutputDoc {
                command: "verify".to_string(),
                input: None,
                algebra: None,
                scalar: Some("rational".to_string()),
                result: battery_echo(&report),
            };
            Ok((doc, code))
        }
    }
}

fn missing(flag: &str) -> CliError {
    CliError::new(format!("{flag} is required for this command"), 2)
}
