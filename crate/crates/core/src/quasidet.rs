//! Quasideterminants, the Hadamard inverse, block inversion through Schur
//! complements, Gauss-type solving, and the representation of
//! quasideterminants through row and column determinants.
//!
//! The `(p,q)` quasideterminant is the deletion-minor expression
//!
//! ```text
//! |A|_{pq} = a_{pq} − r_p^q · (A^{pq})⁻¹ · c_q^p
//! ```
//!
//! where `r_p^q` is row `p` without entry `q`, `c_q^p` is column `q`
//! without entry `p`, and `A^{pq}` is the deletion minor. When `A` is
//! invertible and the entry `b_{qp}` of `A⁻¹` has nonzero norm,
//! `|A|_{pq} = b_{qp}⁻¹`; and through double cofactors,
//! `|A|_{pq} = ddet A · conj(𝕃_{pq}) / n(𝕃_{pq})` and the mirror form with
//! `ℝ_{pq}`. A quasideterminant can be undefined on an invertible matrix
//! (the identity is the standard example) and defined on a ddet-singular
//! one, so undefinedness and singularity are reported separately.

use std::fmt;

use crate::error::{Error, Result};
use crate::qmatrix::QMatrix;
use crate::quat::Quaternion;
use crate::rcdet::{cdet_opt, ddet_opt, inverse_opt, rdet_opt, DetOptions};

/// Why a quasideterminant value does not exist, naming the sub-object that
/// failed.
#[derive(Debug, Clone, PartialEq)]
pub enum QuasiWitness {
    /// The deletion minor `A^{pq}` is not invertible (`ddet = 0`).
    SingularMinor { row: usize, col: usize },
    /// The entry `b_{qp}` of `A⁻¹` is zero or a zero divisor, so
    /// `|A|_{pq} = b_{qp}⁻¹` does not exist.
    ZeroInverseEntry { row: usize, col: usize },
    /// The double cofactor in the determinantal representation has zero
    /// norm (mirrors `b_{qp} = 0`).
    CofactorNormZero { row: usize, col: usize, table: char },
}

impl fmt::Display for QuasiWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuasiWitness::SingularMinor { row, col } => {
                write!(f, "deletion minor A^({row},{col}) is singular")
            }
            QuasiWitness::ZeroInverseEntry { row, col } => {
                write!(f, "inverse entry b[{row}][{col}] has zero norm")
            }
            QuasiWitness::CofactorNormZero { row, col, table } => {
                write!(f, "double cofactor {table}[{row}][{col}] has zero norm")
            }
        }
    }
}

/// A quasideterminant value, or the witness explaining its absence.
#[derive(Debug, Clone, PartialEq)]
pub enum QuasiResult {
    Defined(Quaternion),
    Undefined(QuasiWitness),
}

impl QuasiResult {
    pub fn is_defined(&self) -> bool {
        matches!(self, QuasiResult::Defined(_))
    }

    pub fn value(&self) -> Option<&Quaternion> {
        match self {
            QuasiResult::Defined(v) => Some(v),
            QuasiResult::Undefined(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&QuasiWitness> {
        match self {
            QuasiResult::Defined(_) => None,
            QuasiResult::Undefined(w) => Some(w),
        }
    }
}

/// Both determinantal representations of one quasideterminant.
#[derive(Debug, Clone, PartialEq)]
pub enum QuasiPair {
    Defined {
        column_form: Quaternion,
        row_form: Quaternion,
    },
    Undefined(QuasiWitness),
}

/// Entrywise inverse; errors on the first entry with zero norm.
pub fn hadamard_inverse(a: &QMatrix) -> Result<QMatrix> {
    let mut rows = Vec::with_capacity(a.rows());
    for r in 0..a.rows() {
        let mut row = Vec::with_capacity(a.cols());
        for c in 0..a.cols() {
            row.push(
                a[(r, c)]
                    .inv()
                    .map_err(|_| Error::UndefinedEntry { row: r, col: c })?,
            );
        }
        rows.push(row);
    }
    QMatrix::from_rows(rows)
}

/// The `(p,q)` quasideterminant by the deletion-minor expression.
///
/// `1×1` matrices have `|A|_{00} = a_{00}`. A singular deletion minor makes
/// the value undefined, reported with a witness rather than an error.
pub fn quasideterminant(a: &QMatrix, p: usize, q: usize) -> Result<QuasiResult> {
    quasideterminant_opt(a, p, q, &DetOptions::default())
}

pub fn quasideterminant_opt(
    a: &QMatrix,
    p: usize,
    q: usize,
    opts: &DetOptions,
) -> Result<QuasiResult> {
    a.check_square()?;
    let n = a.rows();
    if p >= n {
        return Err(Error::IndexOutOfRange {
            index: p,
            bound: n,
            axis: "row",
        });
    }
    if q >= n {
        return Err(Error::IndexOutOfRange {
            index: q,
            bound: n,
            axis: "column",
        });
    }
    if n == 1 {
        return Ok(QuasiResult::Defined(a[(0, 0)].clone()));
    }

    let minor = a.delete_rowcol(p, q)?;
    let minor_inv = match inverse_opt(&minor, opts) {
        Ok(inv) => inv,
        Err(Error::SingularMatrix) => {
            return Ok(QuasiResult::Undefined(QuasiWitness::SingularMinor {
                row: p,
                col: q,
            }))
        }
        Err(e) => return Err(e),
    };

    let keep_cols: Vec<usize> = (0..n).filter(|&c| c != q).collect();
    let keep_rows: Vec<usize> = (0..n).filter(|&r| r != p).collect();
    let row_p = a.submatrix(&[p], &keep_cols)?;
    let col_q = a.submatrix(&keep_rows, &[q])?;
    let correction = row_p.matmul(&minor_inv)?.matmul(&col_q)?;
    Ok(QuasiResult::Defined(&a[(p, q)] - &correction[(0, 0)]))
}

/// The `b_{qp}⁻¹` route: invert `A`, take entry `(q,p)` and invert it.
/// Kept as a verification oracle for the expression form.
pub fn quasidet_via_inverse(a: &QMatrix, p: usize, q: usize) -> Result<QuasiResult> {
    quasidet_via_inverse_opt(a, p, q, &DetOptions::default())
}

pub fn quasidet_via_inverse_opt(
    a: &QMatrix,
    p: usize,
    q: usize,
    opts: &DetOptions,
) -> Result<QuasiResult> {
    let inv = inverse_opt(a, opts)?;
    let b_qp = &inv[(q, p)];
    match b_qp.inv() {
        Ok(v) => Ok(QuasiResult::Defined(v)),
        Err(_) => Ok(QuasiResult::Undefined(QuasiWitness::ZeroInverseEntry {
            row: q,
            col: p,
        })),
    }
}

/// Minor of the inverse through the Schur-type identity: for row set `S`
/// and column set `T` of equal size,
///
/// ```text
/// (A⁻¹)_{T,S} = (A_{S,T} − A_{S,T̄} · (A_{S̄,T̄})⁻¹ · A_{S̄,T})⁻¹
/// ```
///
/// with the complements `S̄`, `T̄`. Selecting everything reduces to
/// `inverse(A)`. The index sets must be strictly increasing.
pub fn block_inverse_minor(a: &QMatrix, rows: &[usize], cols: &[usize]) -> Result<QMatrix> {
    block_inverse_minor_opt(a, rows, cols, &DetOptions::default())
}

pub fn block_inverse_minor_opt(
    a: &QMatrix,
    rows: &[usize],
    cols: &[usize],
    opts: &DetOptions,
) -> Result<QMatrix> {
    a.check_square()?;
    if rows.len() != cols.len() {
        return Err(Error::ShapeMismatch {
            op: "block_inverse_minor",
            left: (rows.len(), rows.len()),
            right: (cols.len(), cols.len()),
        });
    }
    let n = a.rows();
    let comp_rows: Vec<usize> = (0..n).filter(|r| !rows.contains(r)).collect();
    let comp_cols: Vec<usize> = (0..n).filter(|c| !cols.contains(c)).collect();

    let block = a.submatrix(rows, cols)?;
    let schur = if comp_rows.is_empty() {
        block
    } else {
        let complement = a.submatrix(&comp_rows, &comp_cols)?;
        let comp_inv = inverse_opt(&complement, opts).map_err(|e| match e {
            Error::SingularMatrix => Error::UndefinedBlock {
                witness: format!("complementary block (rows {comp_rows:?}) is singular"),
            },
            other => other,
        })?;
        let cross_right = a.submatrix(rows, &comp_cols)?;
        let cross_left = a.submatrix(&comp_rows, cols)?;
        &block - &cross_right.matmul(&comp_inv)?.matmul(&cross_left)?
    };
    inverse_opt(&schur, opts).map_err(|e| match e {
        Error::SingularMatrix => Error::UndefinedBlock {
            witness: format!("Schur complement for rows {rows:?}, cols {cols:?} is singular"),
        },
        other => other,
    })
}

/// Solves the right system `Ax = y` by Gauss-type elimination: pivot rows
/// are left-multiplied by pivot inverses, so the solution set is preserved.
/// The pivot is the invertible candidate of maximal norm magnitude in the
/// current column (any invertible pivot is exact in rational mode; the
/// max-norm rule is for float-mode stability).
pub fn quasi_solve(a: &QMatrix, y: &QMatrix) -> Result<QMatrix> {
    a.check_square()?;
    a.check_same_params(y)?;
    if !(y.is_column() && y.rows() == a.rows()) {
        return Err(Error::ShapeMismatch {
            op: "quasi_solve",
            left: (a.rows(), a.cols()),
            right: (y.rows(), y.cols()),
        });
    }
    let n = a.rows();
    // Augmented working rows [A | y].
    let mut work: Vec<Vec<Quaternion>> = (0..n)
        .map(|r| {
            let mut row: Vec<Quaternion> = (0..n).map(|c| a[(r, c)].clone()).collect();
            row.push(y[(r, 0)].clone());
            row
        })
        .collect();

    for col in 0..n {
        // Pivot: maximal |n(entry)| among invertible candidates at or below
        // the diagonal.
        let mut best: Option<(usize, crate::scalar::Scalar)> = None;
        let mut any_nonzero = false;
        for (r, row) in work.iter().enumerate().skip(col) {
            let entry = &row[col];
            if entry.is_zero() {
                continue;
            }
            any_nonzero = true;
            let norm = entry.norm();
            if norm.is_zero() {
                continue;
            }
            let better = match &best {
                None => true,
                Some((_, best_norm)) => norm.cmp_abs(best_norm) == std::cmp::Ordering::Greater,
            };
            if better {
                best = Some((r, norm));
            }
        }
        let pivot_row = match best {
            Some((r, _)) => r,
            None if !any_nonzero => return Err(Error::SingularMatrix),
            None => {
                let stuck = QMatrix::from_rows(
                    work.iter()
                        .skip(col)
                        .map(|row| row[col..n].to_vec())
                        .collect(),
                )?;
                return Err(Error::EliminationStall {
                    certificate: stuck.to_string(),
                });
            }
        };
        work.swap(col, pivot_row);

        // Left-normalize the pivot row, then eliminate below.
        let pivot_inv = work[col][col].inv()?;
        for c in col..=n {
            work[col][c] = pivot_inv.mul_ref(&work[col][c]);
        }
        for r in col + 1..n {
            if work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            for c in col..=n {
                let delta = factor.mul_ref(&work[col][c]);
                work[r][c] = &work[r][c] - &delta;
            }
        }
    }

    // Back substitution; the diagonal is 1.
    let params = a.params();
    let mut x: Vec<Quaternion> = vec![params.zero(); n];
    for r in (0..n).rev() {
        let mut acc = work[r][n].clone();
        for c in r + 1..n {
            acc = &acc - &work[r][c].mul_ref(&x[c]);
        }
        x[r] = acc;
    }
    QMatrix::from_rows(x.into_iter().map(|v| vec![v]).collect())
}

/// Solves the left system `xA = y` by passing to the adjoint right system
/// `A* x* = y*`.
pub fn quasi_solve_left(a: &QMatrix, y: &QMatrix) -> Result<QMatrix> {
    a.check_square()?;
    a.check_same_params(y)?;
    if !(y.is_row() && y.cols() == a.cols()) {
        return Err(Error::ShapeMismatch {
            op: "quasi_solve_left",
            left: (a.rows(), a.cols()),
            right: (y.rows(), y.cols()),
        });
    }
    let x_adj = quasi_solve(&a.hermitian_adjoint(), &y.hermitian_adjoint())?;
    Ok(x_adj.hermitian_adjoint())
}

/// Both determinantal representations of `|A|_{pq}`:
///
/// * column form `ddet A · conj(𝕃_{pq}) / n(𝕃_{pq})`,
/// * row form `ddet A · conj(ℝ_{pq}) / n(ℝ_{pq})`.
///
/// Requires `ddet A ≠ 0`; a zero-norm cofactor mirrors `b_{qp} = 0` and is
/// reported as undefined with the offending table named.
pub fn quasidet_via_rc(a: &QMatrix, p: usize, q: usize) -> Result<QuasiPair> {
    quasidet_via_rc_opt(a, p, q, &DetOptions::default())
}

pub fn quasidet_via_rc_opt(
    a: &QMatrix,
    p: usize,
    q: usize,
    opts: &DetOptions,
) -> Result<QuasiPair> {
    a.check_square()?;
    let n = a.rows();
    if p >= n || q >= n {
        return Err(Error::IndexOutOfRange {
            index: p.max(q),
            bound: n,
            axis: "index",
        });
    }
    let d = ddet_opt(a, opts)?;
    if d.is_zero() {
        return Err(Error::SingularMatrix);
    }

    let adj = a.hermitian_adjoint();
    let gram_left = adj.matmul(a)?;
    let gram_right = a.matmul(&adj)?;
    let l_pq = cdet_opt(&gram_left.replace_col(q, &adj.col(p)?)?, q, opts)?;
    let r_pq = rdet_opt(&gram_right.replace_row(p, &adj.row(q)?)?, p, opts)?;

    let l_norm = l_pq.norm();
    if l_norm.is_zero() {
        return Ok(QuasiPair::Undefined(QuasiWitness::CofactorNormZero {
            row: p,
            col: q,
            table: 'L',
        }));
    }
    let r_norm = r_pq.norm();
    if r_norm.is_zero() {
        return Ok(QuasiPair::Undefined(QuasiWitness::CofactorNormZero {
            row: p,
            col: q,
            table: 'R',
        }));
    }

    let column_form = l_pq.conj().scale(&(&d / &l_norm));
    let row_form = r_pq.conj().scale(&(&d / &r_norm));
    Ok(QuasiPair::Defined {
        column_form,
        row_form,
    })
}
