//! Dense matrices over `H(a,b)` and the minor/replacement calculus.
//!
//! Indices are 0-based throughout the library; the command-line layer is the
//! single place that converts from the 1-based convention used in
//! documentation. Column vectors are `n×1` matrices and rows are `1×n`;
//! there is no separate vector type.
//!
//! All values are immutable; replacement and deletion return fresh matrices.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};
use crate::quat::{AlgebraParams, Quaternion};

/// Dense row-major `m×n` matrix of quaternions sharing one algebra.
///
/// Matrices are never empty; deleting down to zero rows or columns is an
/// error.
#[derive(Debug, Clone, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Quaternion>,
    params: AlgebraParams,
}

impl QMatrix {
    /// Builds a matrix from rows, checking shape and algebra uniformity.
    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::EmptyResult);
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Ragged);
        }
        let params = rows[0][0].params().clone();
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            for q in row {
                if *q.params() != params {
                    return Err(Error::AlgebraMismatch {
                        left: params.to_string(),
                        right: q.params().to_string(),
                    });
                }
                entries.push(q);
            }
        }
        Ok(QMatrix {
            rows: entries.len() / cols,
            cols,
            entries,
            params,
        })
    }

    /// Builds an `m×n` matrix entry by entry.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        params: &AlgebraParams,
        mut f: impl FnMut(usize, usize) -> Quaternion,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyResult);
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let q = f(r, c);
                if q.params() != params {
                    return Err(Error::AlgebraMismatch {
                        left: params.to_string(),
                        right: q.params().to_string(),
                    });
                }
                entries.push(q);
            }
        }
        Ok(QMatrix {
            rows,
            cols,
            entries,
            params: params.clone(),
        })
    }

    pub fn zeros(rows: usize, cols: usize, params: &AlgebraParams) -> Result<Self> {
        Self::from_fn(rows, cols, params, |_, _| params.zero())
    }

    pub fn identity(n: usize, params: &AlgebraParams) -> Result<Self> {
        Self::from_fn(n, n, params, |r, c| {
            if r == c {
                params.one()
            } else {
                params.zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_column(&self) -> bool {
        self.cols == 1
    }

    pub fn is_row(&self) -> bool {
        self.rows == 1
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Quaternion> {
        if r < self.rows && c < self.cols {
            Some(&self.entries[r * self.cols + c])
        } else {
            None
        }
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i < self.rows {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                bound: self.rows,
                axis: "row",
            })
        }
    }

    fn check_col(&self, j: usize) -> Result<()> {
        if j < self.cols {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: j,
                bound: self.cols,
                axis: "column",
            })
        }
    }

    pub(crate) fn check_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub(crate) fn check_same_params(&self, other: &Self) -> Result<()> {
        if self.params == other.params {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch {
                left: self.params.to_string(),
                right: other.params.to_string(),
            })
        }
    }

    /// Row `i` as a `1×n` matrix.
    pub fn row(&self, i: usize) -> Result<QMatrix> {
        self.check_row(i)?;
        self.submatrix(&[i], &(0..self.cols).collect::<Vec<_>>())
    }

    /// Column `j` as an `n×1` matrix.
    pub fn col(&self, j: usize) -> Result<QMatrix> {
        self.check_col(j)?;
        self.submatrix(&(0..self.rows).collect::<Vec<_>>(), &[j])
    }

    /// Row-by-column product with noncommutative entry products taken in
    /// left-factor-first order.
    pub fn matmul(&self, rhs: &QMatrix) -> Result<QMatrix> {
        self.check_same_params(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                op: "matmul",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        QMatrix::from_fn(self.rows, rhs.cols, &self.params, |r, c| {
            let mut acc = self[(r, 0)].mul_ref(&rhs[(0, c)]);
            for k in 1..self.cols {
                acc = &acc + &self[(r, k)].mul_ref(&rhs[(k, c)]);
            }
            acc
        })
    }

    /// Hermitian adjoint `(A*)_ij = conj(a_ji)`.
    pub fn hermitian_adjoint(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, &self.params, |r, c| {
            self[(c, r)].conj()
        })
        .expect("adjoint of a valid matrix")
    }

    /// True iff `a_ij = conj(a_ji)` for all `i, j`; forces the diagonal to
    /// have zero imaginary part. Errors on non-square input.
    pub fn is_hermitian(&self) -> Result<bool> {
        self.check_square()?;
        for i in 0..self.rows {
            for j in i..self.cols {
                if self[(i, j)] != self[(j, i)].conj() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Copy of the matrix with column `j` replaced by the `n×1` column `b`.
    pub fn replace_col(&self, j: usize, b: &QMatrix) -> Result<QMatrix> {
        self.check_col(j)?;
        self.check_same_params(b)?;
        if !(b.is_column() && b.rows == self.rows) {
            return Err(Error::ShapeMismatch {
                op: "replace_col",
                left: (self.rows, self.cols),
                right: (b.rows, b.cols),
            });
        }
        Ok(
            QMatrix::from_fn(self.rows, self.cols, &self.params, |r, c| {
                if c == j {
                    b[(r, 0)].clone()
                } else {
                    self[(r, c)].clone()
                }
            })
            .expect("same shape"),
        )
    }

    /// Copy of the matrix with row `i` replaced by the `1×n` row `b`.
    pub fn replace_row(&self, i: usize, b: &QMatrix) -> Result<QMatrix> {
        self.check_row(i)?;
        self.check_same_params(b)?;
        if !(b.is_row() && b.cols == self.cols) {
            return Err(Error::ShapeMismatch {
                op: "replace_row",
                left: (self.rows, self.cols),
                right: (b.rows, b.cols),
            });
        }
        Ok(
            QMatrix::from_fn(self.rows, self.cols, &self.params, |r, c| {
                if r == i {
                    b[(0, c)].clone()
                } else {
                    self[(r, c)].clone()
                }
            })
            .expect("same shape"),
        )
    }

    /// The deletion minor `A^{ij}`: row `i` and column `j` removed.
    pub fn delete_rowcol(&self, i: usize, j: usize) -> Result<QMatrix> {
        self.check_row(i)?;
        self.check_col(j)?;
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::EmptyResult);
        }
        self.submatrix(&rows, &cols)
    }

    /// Minor selected by strictly increasing row and column index sets;
    /// remaining entries keep their relative order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<QMatrix> {
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::EmptyResult);
        }
        if !rows.windows(2).all(|w| w[0] < w[1]) || !cols.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::parse("index sets must be strictly increasing"));
        }
        self.check_row(*rows.last().unwrap())?;
        self.check_col(*cols.last().unwrap())?;
        Ok(
            QMatrix::from_fn(rows.len(), cols.len(), &self.params, |r, c| {
                self[(rows[r], cols[c])].clone()
            })
            .expect("validated shape"),
        )
    }

    /// Minor with the given row and column index sets removed.
    pub fn delete_rows_cols(&self, rows: &[usize], cols: &[usize]) -> Result<QMatrix> {
        for &r in rows {
            self.check_row(r)?;
        }
        for &c in cols {
            self.check_col(c)?;
        }
        let keep_rows: Vec<usize> = (0..self.rows).filter(|r| !rows.contains(r)).collect();
        let keep_cols: Vec<usize> = (0..self.cols).filter(|c| !cols.contains(c)).collect();
        if keep_rows.is_empty() || keep_cols.is_empty() {
            return Err(Error::EmptyResult);
        }
        self.submatrix(&keep_rows, &keep_cols)
    }

    /// The operation `A(i→j)`: replace column `j` by column `i`, then delete
    /// row `i` and column `i`. For `i = j` this is the principal minor
    /// `A^{ii}`.
    pub fn col_replace_then_delete(&self, i: usize, j: usize) -> Result<QMatrix> {
        self.check_square()?;
        self.check_row(i)?;
        self.check_col(j)?;
        if self.rows == 1 {
            return Err(Error::EmptyResult);
        }
        let replaced = if i == j {
            self.clone()
        } else {
            self.replace_col(j, &self.col(i)?)?
        };
        replaced.delete_rowcol(i, i)
    }

    /// Row `i` left-multiplied by `q` (used by the scaling laws).
    pub fn scale_row_left(&self, i: usize, q: &Quaternion) -> Result<QMatrix> {
        self.check_row(i)?;
        let row = QMatrix::from_fn(1, self.cols, &self.params, |_, c| q.mul_ref(&self[(i, c)]))?;
        self.replace_row(i, &row)
    }

    /// Column `j` right-multiplied by `q`.
    pub fn scale_col_right(&self, j: usize, q: &Quaternion) -> Result<QMatrix> {
        self.check_col(j)?;
        let col = QMatrix::from_fn(self.rows, 1, &self.params, |r, _| self[(r, j)].mul_ref(q))?;
        self.replace_col(j, &col)
    }

    /// Mode-aware equality: exact on rationals, tolerance-based on float64.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries
                .iter()
                .zip(other.entries.iter())
                .all(|(x, y)| x.approx_eq(y))
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;

    fn index(&self, (r, c): (usize, usize)) -> &Quaternion {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.entries[r * self.cols + c]
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;

    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix addition shape mismatch"
        );
        QMatrix::from_fn(self.rows, self.cols, &self.params, |r, c| {
            &self[(r, c)] + &rhs[(r, c)]
        })
        .expect("same shape")
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;

    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix subtraction shape mismatch"
        );
        QMatrix::from_fn(self.rows, self.cols, &self.params, |r, c| {
            &self[(r, c)] - &rhs[(r, c)]
        })
        .expect("same shape")
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;

    fn neg(self) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, &self.params, |r, c| -&self[(r, c)])
            .expect("same shape")
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " | ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::AlgebraParams;

    fn hamilton() -> AlgebraParams {
        AlgebraParams::rational(-1, -1).unwrap()
    }

    /// The running 2×2 example [[i, j], [j, −i]] over H(−1,−1).
    fn running_example(h: &AlgebraParams) -> QMatrix {
        QMatrix::from_rows(vec![vec![h.i(), h.j()], vec![h.j(), -&h.i()]]).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let h = hamilton();
        let a = running_example(&h);
        let id = QMatrix::identity(2, &h).unwrap();
        assert_eq!(id.matmul(&a).unwrap(), a);
        assert_eq!(a.matmul(&id).unwrap(), a);
    }

    #[test]
    fn adjoint_and_gram_of_running_example() {
        let h = hamilton();
        let a = running_example(&h);
        let adj = a.hermitian_adjoint();
        let expected_adj =
            QMatrix::from_rows(vec![vec![-&h.i(), -&h.j()], vec![-&h.j(), h.i()]]).unwrap();
        assert_eq!(adj, expected_adj);

        // A*A = [[2, −2k], [2k, 2]]
        let gram = adj.matmul(&a).unwrap();
        let expected = QMatrix::from_rows(vec![
            vec![
                h.quaternion_i64([2, 0, 0, 0]),
                h.quaternion_i64([0, 0, 0, -2]),
            ],
            vec![
                h.quaternion_i64([0, 0, 0, 2]),
                h.quaternion_i64([2, 0, 0, 0]),
            ],
        ])
        .unwrap();
        assert_eq!(gram, expected);
        assert!(gram.is_hermitian().unwrap());
    }

    #[test]
    fn adjoint_is_involution_and_antimultiplicative() {
        let h = hamilton();
        let a = QMatrix::from_rows(vec![
            vec![
                h.quaternion_i64([1, 2, 0, -1]),
                h.quaternion_i64([0, 3, 1, 0]),
            ],
            vec![
                h.quaternion_i64([2, -1, 1, 1]),
                h.quaternion_i64([5, 0, -2, 3]),
            ],
        ])
        .unwrap();
        let b = QMatrix::from_rows(vec![
            vec![
                h.quaternion_i64([0, 1, 1, 0]),
                h.quaternion_i64([2, 0, 0, 1]),
            ],
            vec![
                h.quaternion_i64([1, 1, -1, 2]),
                h.quaternion_i64([0, 0, 4, 0]),
            ],
        ])
        .unwrap();
        assert_eq!(a.hermitian_adjoint().hermitian_adjoint(), a);
        assert_eq!(
            a.matmul(&b).unwrap().hermitian_adjoint(),
            b.hermitian_adjoint()
                .matmul(&a.hermitian_adjoint())
                .unwrap()
        );
        assert_eq!(
            QMatrix::identity(3, &h).unwrap().hermitian_adjoint(),
            QMatrix::identity(3, &h).unwrap()
        );
    }

    #[test]
    fn hermitian_checks() {
        let h = hamilton();
        let just_i = QMatrix::from_rows(vec![vec![h.i()]]).unwrap();
        assert!(!just_i.is_hermitian().unwrap());
        let rect = QMatrix::zeros(2, 3, &h).unwrap();
        assert!(rect.is_hermitian().is_err());
    }

    #[test]
    fn replacement_and_deletion() {
        let h = hamilton();
        let id3 = QMatrix::identity(3, &h).unwrap();
        let e0 = id3.col(0).unwrap();
        assert_eq!(id3.replace_col(0, &e0).unwrap(), id3);
        assert_eq!(
            id3.delete_rowcol(1, 1).unwrap(),
            QMatrix::identity(2, &h).unwrap()
        );

        let a = running_example(&h);
        let minor = a.delete_rowcol(0, 0).unwrap();
        assert_eq!(minor, QMatrix::from_rows(vec![vec![-&h.i()]]).unwrap());

        // Replace then read back.
        let col = QMatrix::from_rows(vec![vec![h.k()], vec![h.one()]]).unwrap();
        let replaced = a.replace_col(1, &col).unwrap();
        assert_eq!(replaced.col(1).unwrap(), col);

        assert!(QMatrix::from_rows(vec![vec![h.one()]])
            .unwrap()
            .delete_rowcol(0, 0)
            .is_err());
        assert!(a.delete_rowcol(5, 0).is_err());
    }

    #[test]
    fn moore_replacement_minor() {
        let h = hamilton();
        let a = QMatrix::from_rows(vec![
            vec![
                h.quaternion_i64([1, 0, 0, 0]),
                h.quaternion_i64([2, 0, 0, 0]),
            ],
            vec![
                h.quaternion_i64([3, 0, 0, 0]),
                h.quaternion_i64([4, 0, 0, 0]),
            ],
        ])
        .unwrap();
        // i = j: plain principal minor A^{ii}.
        assert_eq!(
            a.col_replace_then_delete(0, 0).unwrap(),
            a.delete_rowcol(0, 0).unwrap()
        );
        // 2×2 with i = 0, j = 1: the single surviving entry is a_21.
        assert_eq!(
            a.col_replace_then_delete(0, 1).unwrap(),
            QMatrix::from_rows(vec![vec![h.quaternion_i64([3, 0, 0, 0])]]).unwrap()
        );
        // Shape of the 3×3 case.
        let b = QMatrix::identity(3, &h).unwrap();
        let m = b.col_replace_then_delete(0, 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 2));
        // n = 1 would leave nothing.
        let one = QMatrix::from_rows(vec![vec![h.one()]]).unwrap();
        assert!(one.col_replace_then_delete(0, 0).is_err());
    }

    #[test]
    fn gram_products_are_hermitian() {
        let h = hamilton();
        let a = QMatrix::from_rows(vec![
            vec![
                h.quaternion_i64([1, 2, 3, 4]),
                h.quaternion_i64([0, -1, 1, 2]),
                h.quaternion_i64([2, 0, 0, 1]),
            ],
            vec![
                h.quaternion_i64([5, 1, 0, 0]),
                h.quaternion_i64([1, 1, 1, 1]),
                h.quaternion_i64([0, 0, 2, -3]),
            ],
        ])
        .unwrap();
        let adj = a.hermitian_adjoint();
        assert!(a.matmul(&adj).unwrap().is_hermitian().unwrap());
        assert!(adj.matmul(&a).unwrap().is_hermitian().unwrap());
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let h = hamilton();
        let g = AlgebraParams::rational(2, 5).unwrap();
        let a = QMatrix::identity(2, &h).unwrap();
        let b = QMatrix::identity(2, &g).unwrap();
        assert!(matches!(a.matmul(&b), Err(Error::AlgebraMismatch { .. })));
        assert!(QMatrix::from_rows(vec![vec![h.one(), g.one()]]).is_err());
    }
}
