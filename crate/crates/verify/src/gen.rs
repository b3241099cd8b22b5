//! Seeded random generators for verification instances.

use ncdet_core::rcdet::{ddet_opt, DetOptions};
use ncdet_core::{AlgebraParams, QMatrix, Quaternion, Scalar, ScalarKind};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Instance generator over one algebra.
pub struct Gen<'a> {
    pub rng: &'a mut ChaCha8Rng,
}

impl<'a> Gen<'a> {
    pub fn new(rng: &'a mut ChaCha8Rng) -> Self {
        Gen { rng }
    }

    /// Small rational with numerator in `[-9, 9]` and denominator in
    /// `{1, 2, 3}`; keeps exact products small through n! expansions.
    pub fn scalar(&mut self) -> Scalar {
        let num = self.rng.gen_range(-9i64..=9);
        let den = self.rng.gen_range(1i64..=3);
        Scalar::rational(num, den).unwrap()
    }

    pub fn quat(&mut self, params: &AlgebraParams) -> Quaternion {
        let coords = [self.scalar(), self.scalar(), self.scalar(), self.scalar()];
        params.quaternion(coords).unwrap()
    }

    /// Quaternion with zero imaginary part.
    pub fn real_quat(&mut self, params: &AlgebraParams) -> Quaternion {
        params.embed(self.scalar()).unwrap()
    }

    pub fn nonzero_quat(&mut self, params: &AlgebraParams) -> Quaternion {
        loop {
            let q = self.quat(params);
            if !q.is_zero() {
                return q;
            }
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize, params: &AlgebraParams) -> QMatrix {
        let mut out = Vec::with_capacity(rows);
        for _ in 0..rows {
            out.push((0..cols).map(|_| self.quat(params)).collect());
        }
        QMatrix::from_rows(out).unwrap()
    }

    /// Matrix with all imaginary coordinates zero (commutative embedding).
    pub fn real_matrix(&mut self, rows: usize, cols: usize, params: &AlgebraParams) -> QMatrix {
        let mut out = Vec::with_capacity(rows);
        for _ in 0..rows {
            out.push((0..cols).map(|_| self.real_quat(params)).collect());
        }
        QMatrix::from_rows(out).unwrap()
    }

    /// Rejection-samples until `ddet ≠ 0`; over a division algebra random
    /// draws are almost never singular, so the cap is generous.
    pub fn invertible(&mut self, n: usize, params: &AlgebraParams) -> QMatrix {
        let opts = DetOptions::default().with_hermitian_agreement(false);
        for _ in 0..64 {
            let a = self.matrix(n, n, params);
            if !ddet_opt(&a, &opts).unwrap().is_zero() {
                return a;
            }
        }
        panic!("no invertible {n}x{n} matrix found in 64 draws");
    }

    /// Random Hermitian matrix: `B*B` for random `B`.
    pub fn hermitian(&mut self, n: usize, params: &AlgebraParams) -> QMatrix {
        let b = self.matrix(n, n, params);
        b.hermitian_adjoint().matmul(&b).unwrap()
    }

    /// Random column (n×1).
    pub fn column(&mut self, n: usize, params: &AlgebraParams) -> QMatrix {
        self.matrix(n, 1, params)
    }

    /// Random row (1×n).
    pub fn row(&mut self, n: usize, params: &AlgebraParams) -> QMatrix {
        self.matrix(1, n, params)
    }
}

/// The standard algebra of the battery: Hamilton quaternions over ℚ.
pub fn hamilton() -> AlgebraParams {
    AlgebraParams::rational(-1, -1).unwrap()
}

/// Scalar kind used by the battery. Float mode exists for scale
/// experiments only; the battery runs exact.
pub fn battery_kind() -> ScalarKind {
    ScalarKind::Rational
}
