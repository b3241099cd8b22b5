//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by algebra, matrix and determinant operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The two operands live in different algebras `H(a,b)`.
    AlgebraMismatch { left: String, right: String },
    /// Exact-rational and float64 scalars were mixed.
    BackendMismatch,
    /// `a = 0` or `b = 0` does not define a quaternion algebra.
    DegenerateAlgebra,
    /// A quaternion with zero norm has no inverse.
    NotInvertible { norm: String },
    /// Operand shapes are incompatible.
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// The operation needs a square matrix.
    NotSquare { rows: usize, cols: usize },
    /// Row or column index outside the matrix.
    IndexOutOfRange {
        index: usize,
        bound: usize,
        axis: &'static str,
    },
    /// Deletion or selection would produce an empty matrix.
    EmptyResult,
    /// Rows of a matrix literal have different lengths.
    Ragged,
    /// The operation needs a Hermitian matrix.
    NotHermitian,
    /// `ddet A = 0`: the matrix has no inverse.
    SingularMatrix,
    /// A Hadamard inverse hit a non-invertible entry.
    UndefinedEntry { row: usize, col: usize },
    /// Direct enumeration over `S_n` was refused; raise `max_enum_dim` to force it.
    EnumerationTooLarge { n: usize, max: usize },
    /// Elimination found no invertible pivot although nonzero entries remain.
    /// Carries the offending submatrix; only possible in non-division algebras.
    EliminationStall { certificate: String },
    /// Two routes that must agree exactly did not. This falsifies the
    /// implementation, not the theory; report it.
    InternalDisagreement { context: String },
    /// A block operation required a sub-inverse that does not exist.
    UndefinedBlock { witness: String },
    /// The image list does not describe a bijection.
    InvalidPermutation { detail: String },
    /// A document or value failed to parse.
    Parse { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AlgebraMismatch { left, right } => {
                write!(f, "algebra mismatch: {left} vs {right}")
            }
            Error::BackendMismatch => write!(f, "mixed scalar backends (rational vs float64)"),
            Error::DegenerateAlgebra => write!(f, "algebra parameters a, b must be nonzero"),
            Error::NotInvertible { norm } => {
                write!(f, "quaternion is not invertible (norm {norm})")
            }
            Error::ShapeMismatch { op, left, right } => write!(
                f,
                "{op}: shape mismatch {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            Error::IndexOutOfRange { index, bound, axis } => {
                write!(f, "{axis} index {index} out of range (< {bound})")
            }
            Error::EmptyResult => write!(f, "operation would produce an empty matrix"),
            Error::Ragged => write!(f, "rows have different lengths"),
            Error::NotHermitian => write!(f, "matrix is not Hermitian"),
            Error::SingularMatrix => write!(f, "matrix is singular (ddet = 0)"),
            Error::UndefinedEntry { row, col } => {
                write!(f, "entry ({row},{col}) is not invertible")
            }
            Error::EnumerationTooLarge { n, max } => write!(
                f,
                "direct enumeration refused for n = {n} (limit {max}); raise max_enum_dim to force"
            ),
            Error::EliminationStall { certificate } => write!(
                f,
                "no invertible pivot among nonzero candidates; offending submatrix: {certificate}"
            ),
            Error::InternalDisagreement { context } => {
                write!(f, "internal disagreement between independent routes: {context}")
            }
            Error::UndefinedBlock { witness } => {
                write!(f, "block inverse undefined: {witness}")
            }
            Error::InvalidPermutation { detail } => {
                write!(f, "invalid permutation: {detail}")
            }
            Error::Parse { detail } => write!(f, "parse error: {detail}"),
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    pub(crate) fn parse(detail: impl Into<String>) -> Self {
        Error::Parse {
            detail: detail.into(),
        }
    }
}
