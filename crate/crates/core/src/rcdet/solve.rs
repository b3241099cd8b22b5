//! Cramer-style solvers for one-sided linear systems.
//!
//! Over a noncommutative ring `Ax = y` (coefficients acting from the left)
//! and `xA = y` (from the right) are distinct problems with distinct
//! formulas:
//!
//! * right system: `x_j = cdet_j (A*A)_{.j}(f) / ddet A` with `f = A*y`;
//! * left system:  `x_i = rdet_i (AA*)_{i.}(z) / ddet A` with `z = yA*`.
//!
//! When the coefficient matrix itself is Hermitian the Gram detour drops
//! out: `x_j = cdet_j A_{.j}(y) / det A` and `x_i = rdet_i A_{i.}(y) / det A`.

use crate::error::{Error, Result};
use crate::qmatrix::QMatrix;

use super::enumerate::{cdet_opt, rdet_opt};
use super::hermitian::{ddet_opt, hermitian_det_opt};
use super::DetOptions;

fn check_right_shapes(a: &QMatrix, y: &QMatrix) -> Result<()> {
    a.check_square()?;
    a.check_same_params(y)?;
    if !(y.is_column() && y.rows() == a.rows()) {
        return Err(Error::ShapeMismatch {
            op: "solve_right",
            left: (a.rows(), a.cols()),
            right: (y.rows(), y.cols()),
        });
    }
    Ok(())
}

fn check_left_shapes(a: &QMatrix, y: &QMatrix) -> Result<()> {
    a.check_square()?;
    a.check_same_params(y)?;
    if !(y.is_row() && y.cols() == a.cols()) {
        return Err(Error::ShapeMismatch {
            op: "solve_left",
            left: (a.rows(), a.cols()),
            right: (y.rows(), y.cols()),
        });
    }
    Ok(())
}

/// Unique solution of the right system `Ax = y`; requires `ddet A ≠ 0`.
pub fn solve_right(a: &QMatrix, y: &QMatrix) -> Result<QMatrix> {
    solve_right_opt(a, y, &DetOptions::default())
}

pub fn solve_right_opt(a: &QMatrix, y: &QMatrix, opts: &DetOptions) -> Result<QMatrix> {
    check_right_shapes(a, y)?;
    let d = ddet_opt(a, opts)?;
    if d.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let d_inv = d.inv()?;
    let adj = a.hermitian_adjoint();
    let gram = adj.matmul(a)?;
    let f = adj.matmul(y)?;
    let n = a.rows();
    let mut rows = Vec::with_capacity(n);
    for j in 0..n {
        let replaced = gram.replace_col(j, &f)?;
        rows.push(vec![cdet_opt(&replaced, j, opts)?.scale(&d_inv)]);
    }
    QMatrix::from_rows(rows)
}

/// Unique solution of the left system `xA = y`; requires `ddet A ≠ 0`.
pub fn solve_left(a: &QMatrix, y: &QMatrix) -> Result<QMatrix> {
    solve_left_opt(a, y, &DetOptions::default())
}

pub fn solve_left_opt(a: &QMatrix, y: &QMatrix, opts: &DetOptions) -> Result<QMatrix> {
    check_left_shapes(a, y)?;
    let d = ddet_opt(a, opts)?;
    if d.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let d_inv = d.inv()?;
    let adj = a.hermitian_adjoint();
    let gram = a.matmul(&adj)?;
    let z = y.matmul(&adj)?;
    let n = a.rows();
    let mut row = Vec::with_capacity(n);
    for i in 0..n {
        let replaced = gram.replace_row(i, &z)?;
        row.push(rdet_opt(&replaced, i, opts)?.scale(&d_inv));
    }
    QMatrix::from_rows(vec![row])
}

/// Right system with a Hermitian coefficient matrix:
/// `x_j = cdet_j A_{.j}(y) / det A`.
pub fn solve_right_hermitian(a: &QMatrix, y: &QMatrix) -> Result<QMatrix> {
    solve_right_hermitian_opt(a, y, &DetOptions::default())
}

pub fn solve_right_hermitian_opt(a: &QMatrix, y: &QMatrix, opts: &DetOptions) -> Result<QMatrix> {
    check_right_shapes(a, y)?;
    if !a.is_hermitian()? {
        return Err(Error::NotHermitian);
    }
    let d = hermitian_det_opt(a, opts)?;
    if d.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let d_inv = d.inv()?;
    let n = a.rows();
    let mut rows = Vec::with_capacity(n);
    for j in 0..n {
        let replaced = a.replace_col(j, y)?;
        rows.push(vec![cdet_opt(&replaced, j, opts)?.scale(&d_inv)]);
    }
    QMatrix::from_rows(rows)
}

/// Left system with a Hermitian coefficient matrix:
/// `x_i = rdet_i A_{i.}(y) / det A`.
pub fn solve_left_hermitian(a: &QMatrix, y: &QMatrix) -> Result<QMatrix> {
    solve_left_hermitian_opt(a, y, &DetOptions::default())
}

pub fn solve_left_hermitian_opt(a: &QMatrix, y: &QMatrix, opts: &DetOptions) -> Result<QMatrix> {
    check_left_shapes(a, y)?;
    if !a.is_hermitian()? {
        return Err(Error::NotHermitian);
    }
    let d = hermitian_det_opt(a, opts)?;
    if d.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let d_inv = d.inv()?;
    let n = a.rows();
    let mut row = Vec::with_capacity(n);
    for i in 0..n {
        let replaced = a.replace_row(i, y)?;
        row.push(rdet_opt(&replaced, i, opts)?.scale(&d_inv));
    }
    QMatrix::from_rows(vec![row])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::AlgebraParams;
    use crate::rcdet::inverse;

    fn hamilton() -> AlgebraParams {
        AlgebraParams::rational(-1, -1).unwrap()
    }

    fn dense(h: &AlgebraParams, n: usize, salt: i64) -> QMatrix {
        QMatrix::from_fn(n, n, h, |r, c| {
            h.quaternion_i64([
                salt + (r * n + c) as i64,
                (r as i64 - c as i64) % 3,
                ((r + 2 * c) % 4) as i64 - 1,
                ((salt as usize + r + c) % 3) as i64 - 1,
            ])
        })
        .unwrap()
    }

    fn column(h: &AlgebraParams, n: usize, salt: i64) -> QMatrix {
        QMatrix::from_fn(n, 1, h, |r, _| {
            h.quaternion_i64([salt - r as i64, (r % 2) as i64, -1, salt % 3])
        })
        .unwrap()
    }

    #[test]
    fn identity_systems_return_the_constants() {
        let h = hamilton();
        let id = QMatrix::identity(3, &h).unwrap();
        let y = column(&h, 3, 4);
        assert_eq!(solve_right(&id, &y).unwrap(), y);
        assert_eq!(solve_right_hermitian(&id, &y).unwrap(), y);
        let yt = y.hermitian_adjoint();
        assert_eq!(solve_left(&id, &yt).unwrap(), yt);
        assert_eq!(solve_left_hermitian(&id, &yt).unwrap(), yt);
    }

    #[test]
    fn right_solution_has_zero_residual_and_matches_inverse() {
        let h = hamilton();
        let a = dense(&h, 3, 5);
        let y = column(&h, 3, 2);
        let x = solve_right(&a, &y).unwrap();
        assert_eq!(a.matmul(&x).unwrap(), y);
        assert_eq!(inverse(&a).unwrap().matmul(&y).unwrap(), x);
    }

    #[test]
    fn left_solution_has_zero_residual_and_matches_inverse() {
        let h = hamilton();
        let a = dense(&h, 3, 6);
        let y = column(&h, 3, 3).hermitian_adjoint();
        let x = solve_left(&a, &y).unwrap();
        assert_eq!(x.matmul(&a).unwrap(), y);
        assert_eq!(y.matmul(&inverse(&a).unwrap()).unwrap(), x);
    }

    #[test]
    fn hermitian_special_cases_agree_with_general_solvers() {
        let h = hamilton();
        let b = dense(&h, 3, 4);
        let a = b.hermitian_adjoint().matmul(&b).unwrap();
        assert!(a.is_hermitian().unwrap());
        let y = column(&h, 3, 7);
        assert_eq!(
            solve_right_hermitian(&a, &y).unwrap(),
            solve_right(&a, &y).unwrap()
        );
        let yt = y.hermitian_adjoint();
        assert_eq!(
            solve_left_hermitian(&a, &yt).unwrap(),
            solve_left(&a, &yt).unwrap()
        );
    }

    #[test]
    fn singular_and_shape_errors() {
        let h = hamilton();
        let singular =
            QMatrix::from_rows(vec![vec![h.i(), h.j()], vec![h.j(), -&h.i()]]).unwrap();
        let y = column(&h, 2, 1);
        assert_eq!(solve_right(&singular, &y).unwrap_err(), Error::SingularMatrix);
        let id = QMatrix::identity(2, &h).unwrap();
        let bad = column(&h, 3, 1);
        assert!(matches!(
            solve_right(&id, &bad),
            Err(Error::ShapeMismatch { .. })
        ));
        // Row passed where a column is expected.
        assert!(matches!(
            solve_right(&id, &y.hermitian_adjoint()),
            Err(Error::ShapeMismatch { .. })
        ));
        assert!(matches!(
            solve_right_hermitian(&singular, &y),
            Err(Error::NotHermitian) | Err(Error::SingularMatrix)
        ));
    }
}
