//! Right and left cofactors and the recursive expansions
//! `rdet_i A = Σ_j a_ij·R_ij` and `cdet_j A = Σ_i L_ij·a_ij`.
//!
//! The minors inherit the surviving original indices in their relative
//! order, so an original index `t` that survives deletion of index `d`
//! lands at position `t − (t > d)`.

use crate::error::{Error, Result};
use crate::qmatrix::QMatrix;
use crate::quat::Quaternion;

use super::enumerate::{cdet_opt, rdet_opt};
use super::DetOptions;

fn check_expandable(a: &QMatrix) -> Result<()> {
    a.check_square()?;
    if a.rows() < 2 {
        return Err(Error::EmptyResult);
    }
    Ok(())
}

fn shifted(index: usize, deleted: usize) -> usize {
    if index > deleted {
        index - 1
    } else {
        index
    }
}

/// The right `ij`-th cofactor `R_ij`, so that `rdet_i A = Σ_j a_ij·R_ij`.
///
/// For `i = j` it is the row determinant of the principal minor `A^{ii}`
/// anchored at the smallest surviving index; otherwise it is
/// `−rdet_j A(i→j)` where `A(i→j)` replaces column `j` by column `i` and
/// deletes row and column `i`.
pub fn right_cofactor(a: &QMatrix, i: usize, j: usize) -> Result<Quaternion> {
    right_cofactor_opt(a, i, j, &DetOptions::default())
}

pub fn right_cofactor_opt(
    a: &QMatrix,
    i: usize,
    j: usize,
    opts: &DetOptions,
) -> Result<Quaternion> {
    check_expandable(a)?;
    let minor = a.col_replace_then_delete(i, j)?;
    if i == j {
        rdet_opt(&minor, 0, opts)
    } else {
        Ok(-&rdet_opt(&minor, shifted(j, i), opts)?)
    }
}

/// The left `ij`-th cofactor `L_ij`, so that `cdet_j A = Σ_i L_ij·a_ij`.
///
/// For `i = j` it is the column determinant of `A^{jj}` anchored at the
/// smallest surviving index; otherwise `−cdet_i` of the matrix obtained by
/// replacing row `i` with row `j` and deleting row and column `j`.
pub fn left_cofactor(a: &QMatrix, i: usize, j: usize) -> Result<Quaternion> {
    left_cofactor_opt(a, i, j, &DetOptions::default())
}

pub fn left_cofactor_opt(a: &QMatrix, i: usize, j: usize, opts: &DetOptions) -> Result<Quaternion> {
    check_expandable(a)?;
    if i == j {
        let minor = a.delete_rowcol(j, j)?;
        cdet_opt(&minor, 0, opts)
    } else {
        let replaced = a.replace_row(i, &a.row(j)?)?;
        let minor = replaced.delete_rowcol(j, j)?;
        Ok(-&cdet_opt(&minor, shifted(i, j), opts)?)
    }
}

/// `rdet_i A` recomputed through the right-cofactor expansion; must equal
/// the direct enumeration exactly.
pub fn rdet_by_expansion(a: &QMatrix, i: usize) -> Result<Quaternion> {
    rdet_by_expansion_opt(a, i, &DetOptions::default())
}

pub fn rdet_by_expansion_opt(a: &QMatrix, i: usize, opts: &DetOptions) -> Result<Quaternion> {
    check_expandable(a)?;
    let mut acc = a.params().zero();
    for j in 0..a.cols() {
        let cof = right_cofactor_opt(a, i, j, opts)?;
        acc = &acc + &a[(i, j)].mul_ref(&cof);
    }
    Ok(acc)
}

/// `cdet_j A` recomputed through the left-cofactor expansion; must equal
/// the direct enumeration exactly.
pub fn cdet_by_expansion(a: &QMatrix, j: usize) -> Result<Quaternion> {
    cdet_by_expansion_opt(a, j, &DetOptions::default())
}

pub fn cdet_by_expansion_opt(a: &QMatrix, j: usize, opts: &DetOptions) -> Result<Quaternion> {
    check_expandable(a)?;
    let mut acc = a.params().zero();
    for i in 0..a.rows() {
        let cof = left_cofactor_opt(a, i, j, opts)?;
        acc = &acc + &cof.mul_ref(&a[(i, j)]);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::AlgebraParams;
    use crate::rcdet::{cdet, rdet};

    fn hamilton() -> AlgebraParams {
        AlgebraParams::rational(-1, -1).unwrap()
    }

    fn dense(h: &AlgebraParams, n: usize, salt: i64) -> QMatrix {
        QMatrix::from_fn(n, n, h, |r, c| {
            h.quaternion_i64([
                salt + (r * n + c) as i64,
                (r as i64 - c as i64) * salt % 5,
                ((r + 2 * c + salt as usize) % 4) as i64 - 1,
                if (r + c) % 2 == 0 { salt % 3 } else { -1 },
            ])
        })
        .unwrap()
    }

    #[test]
    fn two_by_two_expansion_matches_hand_formula() {
        let h = hamilton();
        let a = dense(&h, 2, 3);
        // rdet_0 = a00·R00 + a01·R01 with R00 = a11, R01 = −a10.
        assert_eq!(right_cofactor(&a, 0, 0).unwrap(), a[(1, 1)].clone());
        assert_eq!(right_cofactor(&a, 0, 1).unwrap(), -&a[(1, 0)]);
        assert_eq!(
            rdet_by_expansion(&a, 0).unwrap(),
            &a[(0, 0)].mul_ref(&a[(1, 1)]) - &a[(0, 1)].mul_ref(&a[(1, 0)])
        );
        // cdet_0 = L00·a00 + L10·a10 with L00 = a11, L10 = −a01.
        assert_eq!(left_cofactor(&a, 0, 0).unwrap(), a[(1, 1)].clone());
        assert_eq!(left_cofactor(&a, 1, 0).unwrap(), -&a[(0, 1)]);
        assert_eq!(
            cdet_by_expansion(&a, 0).unwrap(),
            &a[(1, 1)].mul_ref(&a[(0, 0)]) - &a[(0, 1)].mul_ref(&a[(1, 0)])
        );
    }

    #[test]
    fn expansions_agree_with_enumeration() {
        let h = hamilton();
        for n in 2..=4 {
            for salt in [1, 2, 7] {
                let a = dense(&h, n, salt);
                for idx in 0..n {
                    assert_eq!(
                        rdet_by_expansion(&a, idx).unwrap(),
                        rdet(&a, idx).unwrap(),
                        "rdet_{idx} expansion, n={n}, salt={salt}"
                    );
                    assert_eq!(
                        cdet_by_expansion(&a, idx).unwrap(),
                        cdet(&a, idx).unwrap(),
                        "cdet_{idx} expansion, n={n}, salt={salt}"
                    );
                }
            }
        }
    }

    #[test]
    fn identity_cofactors_are_kronecker() {
        let h = hamilton();
        let id = QMatrix::identity(3, &h).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let r = right_cofactor(&id, i, j).unwrap();
                let l = left_cofactor(&id, i, j).unwrap();
                if i == j {
                    assert!(r.is_one());
                    assert!(l.is_one());
                } else {
                    assert!(r.is_zero());
                    assert!(l.is_zero());
                }
            }
        }
    }

    #[test]
    fn expansion_needs_dimension_two() {
        let h = hamilton();
        let one = QMatrix::from_rows(vec![vec![h.one()]]).unwrap();
        assert!(rdet_by_expansion(&one, 0).is_err());
        assert!(cdet_by_expansion(&one, 0).is_err());
    }
}
