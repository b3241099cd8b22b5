//! Determinants of Hermitian matrices, the Moore recursion, double
//! determinants, double cofactors and the adjoint-style inverse.

use crate::error::{Error, Result};
use crate::qmatrix::QMatrix;
use crate::quat::Quaternion;
use crate::scalar::Scalar;

use super::enumerate::{cdet_opt, rdet_opt};
use super::DetOptions;

fn check_hermitian(a: &QMatrix) -> Result<()> {
    if a.is_hermitian()? {
        Ok(())
    } else {
        Err(Error::NotHermitian)
    }
}

/// Moore determinant of a Hermitian matrix by the recursion
/// `Mdet A = Σ_j ε_j·a_{0j}·Mdet A(0→j)` with `ε_j = 1` for `j = 0` and
/// `−1` otherwise; `Mdet [a] = a`.
///
/// Each recursive expansion continues along the row that received the
/// replaced column (index `j`, shifted past the deleted row), exactly as in
/// the right-cofactor expansion; a recursion that always re-anchored at the
/// first row would scramble the factor order of the monomials.
pub fn mdet(a: &QMatrix) -> Result<Quaternion> {
    mdet_opt(a, &DetOptions::default())
}

pub fn mdet_opt(a: &QMatrix, opts: &DetOptions) -> Result<Quaternion> {
    check_hermitian(a)?;
    if a.rows() > opts.max_enum_dim {
        return Err(Error::EnumerationTooLarge {
            n: a.rows(),
            max: opts.max_enum_dim,
        });
    }
    let value = mdet_rec(a, 0);
    if !value.is_scalar() && a.params().kind() == crate::scalar::ScalarKind::Rational {
        return Err(Error::InternalDisagreement {
            context: format!("Moore determinant has nonzero imaginary part: {value}"),
        });
    }
    Ok(value)
}

/// Recursion on the replacement minors; the input is only Hermitian at the
/// top level, which is all the recursion needs. `anchor` is the expansion
/// row of the current minor.
fn mdet_rec(a: &QMatrix, anchor: usize) -> Quaternion {
    let n = a.rows();
    if n == 1 {
        return a[(0, 0)].clone();
    }
    let mut acc = a.params().zero();
    for j in 0..n {
        let minor = a
            .col_replace_then_delete(anchor, j)
            .expect("n ≥ 2 replacement minor");
        let sub_anchor = match j {
            _ if j == anchor => 0,
            _ if j > anchor => j - 1,
            _ => j,
        };
        let term = a[(anchor, j)].mul_ref(&mdet_rec(&minor, sub_anchor));
        acc = if j == anchor { &acc + &term } else { &acc - &term };
    }
    acc
}

/// The determinant of a Hermitian matrix: all `2n` row and column
/// determinants coincide and lie in the base field; this returns that field
/// element (computed as `rdet_0`).
///
/// With [`DetOptions::check_hermitian_agreement`] set, every other anchor is
/// recomputed and compared; disagreement falsifies the implementation and is
/// reported as [`Error::InternalDisagreement`].
pub fn hermitian_det(a: &QMatrix) -> Result<Scalar> {
    hermitian_det_opt(a, &DetOptions::default())
}

pub fn hermitian_det_opt(a: &QMatrix, opts: &DetOptions) -> Result<Scalar> {
    check_hermitian(a)?;
    let value = rdet_opt(a, 0, opts)?;
    if !value.is_scalar() {
        return Err(Error::InternalDisagreement {
            context: format!("Hermitian determinant has nonzero imaginary part: {value}"),
        });
    }
    if opts.check_hermitian_agreement {
        for idx in 0..a.rows() {
            let r = rdet_opt(a, idx, opts)?;
            let c = cdet_opt(a, idx, opts)?;
            if !(r.approx_eq(&value) && c.approx_eq(&value)) {
                return Err(Error::InternalDisagreement {
                    context: format!(
                        "Hermitian determinant anchors disagree: rdet_0 = {value}, rdet_{idx} = {r}, cdet_{idx} = {c}"
                    ),
                });
            }
        }
    }
    Ok(value.x0().clone())
}

/// Double determinant `ddet A = det(A*A)`, cross-checked against
/// `det(AA*)`; the two coincide for every square `A`.
pub fn ddet(a: &QMatrix) -> Result<Scalar> {
    ddet_opt(a, &DetOptions::default())
}

pub fn ddet_opt(a: &QMatrix, opts: &DetOptions) -> Result<Scalar> {
    a.check_square()?;
    let adj = a.hermitian_adjoint();
    let left = hermitian_det_opt(&adj.matmul(a)?, opts)?;
    let right = hermitian_det_opt(&a.matmul(&adj)?, opts)?;
    if !left.approx_eq(&right) {
        return Err(Error::InternalDisagreement {
            context: format!("det(A*A) = {left} but det(AA*) = {right}"),
        });
    }
    Ok(left)
}

/// The two `n×n` tables of double cofactors.
///
/// `left[i][j] = cdet_j (A*A)_{.j}(a*_{.i})` and
/// `right[i][j] = rdet_i (AA*)_{i.}(a*_{j.})`; when `ddet A ≠ 0` the tables
/// coincide entrywise.
#[derive(Debug, Clone)]
pub struct DoubleCofactors {
    pub left: Vec<Vec<Quaternion>>,
    pub right: Vec<Vec<Quaternion>>,
}

pub fn double_cofactors(a: &QMatrix) -> Result<DoubleCofactors> {
    double_cofactors_opt(a, &DetOptions::default())
}

pub fn double_cofactors_opt(a: &QMatrix, opts: &DetOptions) -> Result<DoubleCofactors> {
    a.check_square()?;
    let n = a.rows();
    let adj = a.hermitian_adjoint();
    let gram_left = adj.matmul(a)?; // A*A
    let gram_right = a.matmul(&adj)?; // AA*

    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for i in 0..n {
        let mut lrow = Vec::with_capacity(n);
        let mut rrow = Vec::with_capacity(n);
        for j in 0..n {
            lrow.push(left_double_cofactor(&adj, &gram_left, i, j, opts)?);
            rrow.push(right_double_cofactor(&adj, &gram_right, i, j, opts)?);
        }
        left.push(lrow);
        right.push(rrow);
    }
    Ok(DoubleCofactors { left, right })
}

fn left_double_cofactor(
    adj: &QMatrix,
    gram_left: &QMatrix,
    i: usize,
    j: usize,
    opts: &DetOptions,
) -> Result<Quaternion> {
    let replaced = gram_left.replace_col(j, &adj.col(i)?)?;
    cdet_opt(&replaced, j, opts)
}

fn right_double_cofactor(
    adj: &QMatrix,
    gram_right: &QMatrix,
    i: usize,
    j: usize,
    opts: &DetOptions,
) -> Result<Quaternion> {
    let replaced = gram_right.replace_row(i, &adj.row(j)?)?;
    rdet_opt(&replaced, i, opts)
}

/// Inverse through the analog of the classical adjugate:
/// `(A⁻¹)_{pq} = 𝕃_{qp} / ddet A`. Requires `ddet A ≠ 0`; the result
/// satisfies `A·A⁻¹ = A⁻¹·A = I` exactly in rational mode and also equals
/// the arrangement built from the right double cofactors.
pub fn inverse(a: &QMatrix) -> Result<QMatrix> {
    inverse_opt(a, &DetOptions::default())
}

pub fn inverse_opt(a: &QMatrix, opts: &DetOptions) -> Result<QMatrix> {
    a.check_square()?;
    let d = ddet_opt(a, opts)?;
    if d.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let d_inv = d.inv()?;
    let n = a.rows();
    let adj = a.hermitian_adjoint();
    let gram_left = adj.matmul(a)?;
    let mut rows = Vec::with_capacity(n);
    for p in 0..n {
        let mut row = Vec::with_capacity(n);
        for q in 0..n {
            let cof = left_double_cofactor(&adj, &gram_left, q, p, opts)?;
            row.push(cof.scale(&d_inv));
        }
        rows.push(row);
    }
    QMatrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::AlgebraParams;
    use crate::rcdet::rdet;

    fn hamilton() -> AlgebraParams {
        AlgebraParams::rational(-1, -1).unwrap()
    }

    fn running_example(h: &AlgebraParams) -> QMatrix {
        QMatrix::from_rows(vec![vec![h.i(), h.j()], vec![h.j(), -&h.i()]]).unwrap()
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

    #[test]
    fn mdet_of_running_example_gram_is_zero() {
        let h = hamilton();
        let a = running_example(&h);
        let gram = a.hermitian_adjoint().matmul(&a).unwrap();
        // Mdet [[2, −2k], [2k, 2]] = 4 + 4k² = 0 over H(−1,−1).
        assert!(mdet(&gram).unwrap().is_zero());
    }

    #[test]
    fn mdet_identity_and_agreement_with_rdet() {
        let h = hamilton();
        for n in 1..=4 {
            let id = QMatrix::identity(n, &h).unwrap();
            assert!(mdet(&id).unwrap().is_one());
        }
        for n in 2..=4 {
            let b = dense(&h, n, 2);
            let gram = b.hermitian_adjoint().matmul(&b).unwrap();
            assert_eq!(mdet(&gram).unwrap(), rdet(&gram, 0).unwrap());
        }
    }

    #[test]
    fn mdet_rejects_non_hermitian() {
        let h = hamilton();
        let a = running_example(&h);
        assert_eq!(mdet(&a).unwrap_err(), Error::NotHermitian);
    }

    #[test]
    fn hermitian_det_examples() {
        let h = hamilton();
        let a = running_example(&h);
        let gram = a.hermitian_adjoint().matmul(&a).unwrap();
        assert!(hermitian_det(&gram).unwrap().is_zero());
        assert!(hermitian_det(&QMatrix::identity(3, &h).unwrap())
            .unwrap()
            .is_one());
        assert_eq!(hermitian_det(&a).unwrap_err(), Error::NotHermitian);
    }

    /// ddet of a 2×2 matrix in closed form:
    /// `n(a00)n(a11) + n(a10)n(a01) − t(conj(a00)·a01·conj(a11)·a10)`.
    #[test]
    fn ddet_two_by_two_closed_form() {
        let h = hamilton();
        for salt in [1, 3, 9] {
            let a = dense(&h, 2, salt);
            let (a00, a01, a10, a11) = (&a[(0, 0)], &a[(0, 1)], &a[(1, 0)], &a[(1, 1)]);
            let trace_term = a00
                .conj()
                .mul_ref(a01)
                .mul_ref(&a11.conj())
                .mul_ref(a10)
                .trace();
            let expected = &(&(&a00.norm() * &a11.norm()) + &(&a10.norm() * &a01.norm()))
                - &trace_term.x0().clone();
            assert_eq!(ddet(&a).unwrap(), expected, "salt={salt}");
        }
    }

    #[test]
    fn ddet_examples() {
        let h = hamilton();
        assert!(ddet(&running_example(&h)).unwrap().is_zero());
        assert!(ddet(&QMatrix::identity(3, &h).unwrap()).unwrap().is_one());
    }

    #[test]
    fn ddet_multiplicative_over_hamilton() {
        let h = hamilton();
        for salt in [1, 4] {
            let a = dense(&h, 3, salt);
            let b = dense(&h, 3, salt + 5);
            let ab = a.matmul(&b).unwrap();
            assert_eq!(
                ddet(&ab).unwrap(),
                &ddet(&a).unwrap() * &ddet(&b).unwrap(),
                "salt={salt}"
            );
        }
    }

    #[test]
    fn double_cofactors_of_identity() {
        let h = hamilton();
        let id = QMatrix::identity(2, &h).unwrap();
        let dc = double_cofactors(&id).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let expect_one = i == j;
                assert_eq!(dc.left[i][j].is_one(), expect_one);
                assert_eq!(dc.left[i][j].is_zero(), !expect_one);
                assert_eq!(dc.left[i][j], dc.right[i][j]);
            }
        }
    }

    /// Hand expansion of 𝕃_00 for a 2×2 matrix: with G = A*A and the first
    /// column of G replaced by (conj a00, conj a01)ᵀ,
    /// 𝕃_00 = cdet_0 = G11·conj(a00) − G01·conj(a01).
    #[test]
    fn double_cofactor_two_by_two_spot_value() {
        let h = hamilton();
        let a = dense(&h, 2, 5);
        let gram = a.hermitian_adjoint().matmul(&a).unwrap();
        let expected = &gram[(1, 1)].mul_ref(&a[(0, 0)].conj())
            - &gram[(0, 1)].mul_ref(&a[(0, 1)].conj());
        let dc = double_cofactors(&a).unwrap();
        assert_eq!(dc.left[0][0], expected);
    }

    #[test]
    fn left_and_right_double_cofactors_agree_when_invertible() {
        let h = hamilton();
        let a = dense(&h, 3, 2);
        assert!(!ddet(&a).unwrap().is_zero());
        let dc = double_cofactors(&a).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(dc.left[i][j], dc.right[i][j], "L and R at ({i},{j})");
            }
        }
    }

    #[test]
    fn inverse_round_trip_and_singular_rejection() {
        let h = hamilton();
        let id = QMatrix::identity(3, &h).unwrap();
        assert_eq!(inverse(&id).unwrap(), id);

        let a = dense(&h, 3, 7);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.matmul(&inv).unwrap(), id);
        assert_eq!(inv.matmul(&a).unwrap(), id);

        // (A⁻¹)* = (A*)⁻¹ and inverse ∘ inverse = id.
        assert_eq!(
            inv.hermitian_adjoint(),
            inverse(&a.hermitian_adjoint()).unwrap()
        );
        assert_eq!(inverse(&inv).unwrap(), a);

        assert_eq!(
            inverse(&running_example(&h)).unwrap_err(),
            Error::SingularMatrix
        );
    }
}
