//! Checks of the elementary row/column determinant laws on a given matrix:
//! zero row annihilation, left row scaling, right column scaling, and
//! additivity in a row and a column. Failures are reported, not raised;
//! every law holds for every square matrix, so a failure falsifies the
//! implementation.

use crate::error::Result;
use crate::qmatrix::QMatrix;
use crate::quat::Quaternion;

use super::enumerate::{cdet_opt, rdet_opt};
use super::DetOptions;

#[derive(Debug, Clone)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.checks.push(PropertyCheck {
            name: name.into(),
            passed,
            detail,
        });
    }
}

/// Runs the basic determinant laws against `a` (square), scaling with `q`
/// and splitting row/column 0 for the additivity laws.
pub fn basic_property_checks(a: &QMatrix, q: &Quaternion) -> Result<PropertyReport> {
    basic_property_checks_opt(a, q, &DetOptions::default())
}

pub fn basic_property_checks_opt(
    a: &QMatrix,
    q: &Quaternion,
    opts: &DetOptions,
) -> Result<PropertyReport> {
    a.check_square()?;
    a.params().quaternion(q.coords().clone())?; // backend agreement
    let n = a.rows();
    let mut report = PropertyReport { checks: Vec::new() };

    // Zero row ⇒ every rdet_i and cdet_j vanishes.
    {
        let zero_row = QMatrix::zeros(1, n, a.params())?;
        let zeroed = a.replace_row(0, &zero_row)?;
        let mut ok = true;
        let mut detail = None;
        for idx in 0..n {
            let r = rdet_opt(&zeroed, idx, opts)?;
            let c = cdet_opt(&zeroed, idx, opts)?;
            if !(r.is_zero() && c.is_zero()) {
                ok = false;
                detail = Some(format!("index {idx}: rdet = {r}, cdet = {c}"));
                break;
            }
        }
        report.push("zero-row", ok, detail);
    }

    // Left-scaling row i multiplies rdet_i from the left.
    for i in 0..n {
        let scaled = a.scale_row_left(i, q)?;
        let got = rdet_opt(&scaled, i, opts)?;
        let expected = q.mul_ref(&rdet_opt(a, i, opts)?);
        let ok = got.approx_eq(&expected) || got == expected;
        report.push(
            format!("row-{i}-left-scaling"),
            ok,
            (!ok).then(|| format!("got {got}, expected {expected}")),
        );
    }

    // Right-scaling column j multiplies cdet_j from the right.
    for j in 0..n {
        let scaled = a.scale_col_right(j, q)?;
        let got = cdet_opt(&scaled, j, opts)?;
        let expected = cdet_opt(a, j, opts)?.mul_ref(q);
        let ok = got.approx_eq(&expected) || got == expected;
        report.push(
            format!("col-{j}-right-scaling"),
            ok,
            (!ok).then(|| format!("got {got}, expected {expected}")),
        );
    }

    // Additivity in row 0: split a_{0c} = b_c + c_c with a nontrivial b.
    {
        let basis = [
            a.params().one(),
            a.params().i(),
            a.params().j(),
            a.params().k(),
        ];
        let b = QMatrix::from_fn(1, n, a.params(), |_, c| &a[(0, c)] - &basis[c % 4])?;
        let c = QMatrix::from_fn(1, n, a.params(), |_, c| basis[c % 4].clone())?;
        let with_b = a.replace_row(0, &b)?;
        let with_c = a.replace_row(0, &c)?;
        let mut ok = true;
        let mut detail = None;
        for idx in 0..n {
            let whole = rdet_opt(a, idx, opts)?;
            let split = &rdet_opt(&with_b, idx, opts)? + &rdet_opt(&with_c, idx, opts)?;
            let cwhole = cdet_opt(a, idx, opts)?;
            let csplit = &cdet_opt(&with_b, idx, opts)? + &cdet_opt(&with_c, idx, opts)?;
            if !(whole.approx_eq(&split) && cwhole.approx_eq(&csplit)) {
                ok = false;
                detail = Some(format!("anchor {idx}"));
                break;
            }
        }
        report.push("row-additivity", ok, detail);
    }

    // Additivity in column 0.
    {
        let basis = [
            a.params().one(),
            a.params().i(),
            a.params().j(),
            a.params().k(),
        ];
        let b = QMatrix::from_fn(n, 1, a.params(), |r, _| &a[(r, 0)] - &basis[r % 4])?;
        let c = QMatrix::from_fn(n, 1, a.params(), |r, _| basis[r % 4].clone())?;
        let with_b = a.replace_col(0, &b)?;
        let with_c = a.replace_col(0, &c)?;
        let mut ok = true;
        let mut detail = None;
        for idx in 0..n {
            let whole = rdet_opt(a, idx, opts)?;
            let split = &rdet_opt(&with_b, idx, opts)? + &rdet_opt(&with_c, idx, opts)?;
            let cwhole = cdet_opt(a, idx, opts)?;
            let csplit = &cdet_opt(&with_b, idx, opts)? + &cdet_opt(&with_c, idx, opts)?;
            if !(whole.approx_eq(&split) && cwhole.approx_eq(&csplit)) {
                ok = false;
                detail = Some(format!("anchor {idx}"));
                break;
            }
        }
        report.push("col-additivity", ok, detail);
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::AlgebraParams;
    use crate::rcdet::rdet;

    fn hamilton() -> AlgebraParams {
        AlgebraParams::rational(-1, -1).unwrap()
    }

    #[test]
    fn laws_hold_on_a_dense_matrix() {
        let h = hamilton();
        let a = QMatrix::from_fn(3, 3, &h, |r, c| {
            h.quaternion_i64([
                1 + (r * 3 + c) as i64,
                r as i64 - c as i64,
                ((r + 2 * c) % 3) as i64,
                ((r * c) % 2) as i64,
            ])
        })
        .unwrap();
        let q = h.quaternion_i64([1, 2, 0, -1]);
        let report = basic_property_checks(&a, &q).unwrap();
        assert!(report.all_passed(), "{:?}", report.checks);
        assert!(report.checks.len() >= 9);
    }

    #[test]
    fn scaling_identity_row_gives_the_scalar() {
        let h = hamilton();
        let id = QMatrix::identity(3, &h).unwrap();
        let q = h.quaternion_i64([0, 3, -1, 2]);
        let scaled = id.scale_row_left(1, &q).unwrap();
        assert_eq!(rdet(&scaled, 1).unwrap(), q);
    }
}
