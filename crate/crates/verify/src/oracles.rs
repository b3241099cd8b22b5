//! Independent reference computations used to check the main
//! implementation. Nothing here calls into the determinant enumeration
//! paths being verified.

use ncdet_core::{QMatrix, Scalar, ScalarKind};

/// Classical determinant of a commutative (field-element) matrix by
/// fraction-free Gaussian elimination (Bareiss one-step): every division is
/// exact in the base domain, so rational inputs stay exact.
pub fn classical_det(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    assert!(n > 0 && rows.iter().all(|r| r.len() == n), "square input");
    let kind = rows[0][0].kind();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut sign_flip = false;
    let mut prev = Scalar::one(kind);

    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Scalar::zero(kind),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = &num / &prev;
            }
            m[i][k] = Scalar::zero(kind);
        }
        prev = m[k][k].clone();
    }

    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -&det
    } else {
        det
    }
}

/// Extracts the scalar parts of a real-embedded quaternion matrix (all
/// imaginary coordinates zero); panics if any entry has an imaginary part.
pub fn scalar_parts(a: &QMatrix) -> Vec<Vec<Scalar>> {
    (0..a.rows())
        .map(|r| {
            (0..a.cols())
                .map(|c| {
                    let q = &a[(r, c)];
                    assert!(q.is_scalar(), "entry ({r},{c}) is not real-embedded");
                    q.x0().clone()
                })
                .collect()
        })
        .collect()
}

/// Classical Leibniz determinant by direct permutation expansion; an even
/// slower, even more independent crosscheck for the Bareiss oracle itself.
pub fn leibniz_det(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    let kind = rows[0][0].kind();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc = Scalar::zero(kind);
    loop {
        let mut term = Scalar::one(kind);
        for (r, &c) in perm.iter().enumerate() {
            term = &term * &rows[r][c];
        }
        if inversion_parity(&perm) {
            term = -&term;
        }
        acc = &acc + &term;
        if !next_perm(&mut perm) {
            break;
        }
    }
    acc
}

fn inversion_parity(p: &[usize]) -> bool {
    let mut odd = false;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                odd = !odd;
            }
        }
    }
    odd
}

fn next_perm(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Convenience: integer matrix to scalars.
pub fn int_matrix(rows: &[Vec<i64>]) -> Vec<Vec<Scalar>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&v| Scalar::from_i64(v, ScalarKind::Rational))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_known_values_and_leibniz() {
        let m = int_matrix(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]);
        assert_eq!(classical_det(&m), Scalar::from_i64(-3, ScalarKind::Rational));
        assert_eq!(classical_det(&m), leibniz_det(&m));

        let with_zero_pivot = int_matrix(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            classical_det(&with_zero_pivot),
            Scalar::from_i64(-1, ScalarKind::Rational)
        );

        let singular = int_matrix(&[vec![1, 2], vec![2, 4]]);
        assert!(classical_det(&singular).is_zero());

        let m4 = int_matrix(&[
            vec![2, -1, 0, 3],
            vec![1, 1, 1, 1],
            vec![0, 5, -2, 1],
            vec![3, 0, 0, -4],
        ]);
        assert_eq!(classical_det(&m4), leibniz_det(&m4));
    }
}
