//! Rank by right-column elimination and rank by principal minors.
//!
//! The rank of `A` is the maximal number of right-linearly independent
//! columns. Elimination right-multiplies columns, which preserves the right
//! column span; pivots must be invertible entries (`n ≠ 0`). In a division
//! algebra a pivot always exists while nonzero entries remain; in a
//! splittable algebra the search can stall on a submatrix of zero divisors,
//! which is reported with the offending submatrix instead of guessing.

use crate::error::{Error, Result};
use crate::qmatrix::QMatrix;

use super::hermitian::hermitian_det_opt;
use super::DetOptions;

/// Rank of an `m×n` matrix over `H(a,b)`.
pub fn rank(a: &QMatrix) -> Result<usize> {
    let m = a.rows();
    let n = a.cols();
    let mut work: Vec<Vec<_>> = (0..m)
        .map(|r| (0..n).map(|c| a[(r, c)].clone()).collect())
        .collect();
    let mut row_used = vec![false; m];
    let mut col_used = vec![false; n];
    let mut pivots = 0usize;

    loop {
        // First remaining entry with nonzero norm, scanning column-major.
        let mut pivot: Option<(usize, usize)> = None;
        let mut any_nonzero = false;
        'cols: for c in 0..n {
            if col_used[c] {
                continue;
            }
            for (r, row) in work.iter().enumerate() {
                if row_used[r] || row[c].is_zero() {
                    continue;
                }
                any_nonzero = true;
                if !row[c].norm().is_zero() {
                    pivot = Some((r, c));
                    break 'cols;
                }
            }
        }

        let (pr, pc) = match pivot {
            Some(p) => p,
            None if !any_nonzero => return Ok(pivots),
            None => {
                let rows: Vec<usize> = (0..m).filter(|&r| !row_used[r]).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| !col_used[c]).collect();
                let stuck = QMatrix::from_rows(
                    rows.iter()
                        .map(|&r| cols.iter().map(|&c| work[r][c].clone()).collect())
                        .collect(),
                )?;
                return Err(Error::EliminationStall {
                    certificate: stuck.to_string(),
                });
            }
        };

        // Right column operation col_c ← col_c − col_pc·(pivot⁻¹·a[pr][c]),
        // which zeroes row pr outside the pivot column and preserves the
        // right column span.
        let pivot_inv = work[pr][pc].inv()?;
        for c in 0..n {
            if c == pc || col_used[c] {
                continue;
            }
            let factor = pivot_inv.mul_ref(&work[pr][c]);
            for r in 0..m {
                let delta = work[r][pc].mul_ref(&factor);
                work[r][c] = &work[r][c] - &delta;
            }
        }
        row_used[pr] = true;
        col_used[pc] = true;
        pivots += 1;
    }
}

/// Rank of a Hermitian matrix by principal minors: the maximal order of a
/// principal submatrix with nonzero determinant (exhaustive over index
/// subsets, intended for small `n`).
pub fn principal_minor_rank(h: &QMatrix) -> Result<usize> {
    principal_minor_rank_opt(h, &DetOptions::default())
}

pub fn principal_minor_rank_opt(h: &QMatrix, opts: &DetOptions) -> Result<usize> {
    if !h.is_hermitian()? {
        return Err(Error::NotHermitian);
    }
    let n = h.rows();
    for order in (1..=n).rev() {
        for subset in subsets_of_size(n, order) {
            let minor = h.submatrix(&subset, &subset)?;
            if !hermitian_det_opt(&minor, opts)?.is_zero() {
                return Ok(order);
            }
        }
    }
    Ok(0)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            go(v + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}
