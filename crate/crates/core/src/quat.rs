//! The generalized quaternion algebra `H(a,b)` over the base field.
//!
//! `H(a,b)` is the four-dimensional algebra with basis `{1, i, j, k}` and
//! multiplication generated by `i² = a`, `j² = b`, `ij = k`, `ji = −k`.
//! Associativity forces the remaining products:
//!
//! ```text
//! k² = −ab,   ik = aj,   ki = −aj,   kj = bi,   jk = −bi
//! ```
//!
//! For `a < 0`, `b < 0` over the rationals the norm form is positive
//! definite and every nonzero element is invertible; other parameter pairs
//! may contain zero divisors (for example `H(1,1)`), so every inversion path
//! checks the norm rather than assuming a division algebra.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarKind};

/// The parameter pair `(a, b)` that fixes the multiplication table.
///
/// Two values interoperate only if their parameters are equal; the equality
/// includes the scalar backend, so rational and float64 algebras never mix.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraParams {
    a: Scalar,
    b: Scalar,
}

impl AlgebraParams {
    /// Builds `H(a,b)`, rejecting degenerate parameters and mixed backends.
    pub fn new(a: Scalar, b: Scalar) -> Result<Self> {
        if a.kind() != b.kind() {
            return Err(Error::BackendMismatch);
        }
        if a.is_zero() || b.is_zero() {
            return Err(Error::DegenerateAlgebra);
        }
        Ok(AlgebraParams { a, b })
    }

    /// `H(a,b)` over the rationals with integer parameters.
    pub fn rational(a: i64, b: i64) -> Result<Self> {
        Self::new(
            Scalar::from_i64(a, ScalarKind::Rational),
            Scalar::from_i64(b, ScalarKind::Rational),
        )
    }

    /// `H(a,b)` with the float64 backend.
    pub fn float64(a: f64, b: f64) -> Result<Self> {
        Self::new(Scalar::float(a), Scalar::float(b))
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn kind(&self) -> ScalarKind {
        self.a.kind()
    }

    /// True when `a < 0` and `b < 0`, which makes the norm form positive
    /// definite; every nonzero quaternion is then invertible.
    pub fn has_positive_definite_norm(&self) -> bool {
        self.a.is_negative() && self.b.is_negative()
    }

    /// Quaternion with the given coordinates; all must use this algebra's
    /// backend.
    pub fn quaternion(&self, coords: [Scalar; 4]) -> Result<Quaternion> {
        if coords.iter().any(|c| c.kind() != self.kind()) {
            return Err(Error::BackendMismatch);
        }
        Ok(Quaternion {
            coords,
            params: self.clone(),
        })
    }

    /// Quaternion with integer coordinates.
    pub fn quaternion_i64(&self, c: [i64; 4]) -> Quaternion {
        let kind = self.kind();
        Quaternion {
            coords: c.map(|v| Scalar::from_i64(v, kind)),
            params: self.clone(),
        }
    }

    pub fn scalar_i64(&self, v: i64) -> Scalar {
        Scalar::from_i64(v, self.kind())
    }

    pub fn zero(&self) -> Quaternion {
        self.quaternion_i64([0, 0, 0, 0])
    }

    pub fn one(&self) -> Quaternion {
        self.quaternion_i64([1, 0, 0, 0])
    }

    pub fn i(&self) -> Quaternion {
        self.quaternion_i64([0, 1, 0, 0])
    }

    pub fn j(&self) -> Quaternion {
        self.quaternion_i64([0, 0, 1, 0])
    }

    pub fn k(&self) -> Quaternion {
        self.quaternion_i64([0, 0, 0, 1])
    }

    /// Embeds a field element as a quaternion with zero imaginary part.
    pub fn embed(&self, s: Scalar) -> Result<Quaternion> {
        let z = Scalar::zero(self.kind());
        self.quaternion([s, z.clone(), z.clone(), z])
    }
}

impl fmt::Display for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{})", self.a, self.b)
    }
}

/// Coordinate vector `(x0, x1, x2, x3)` in the basis `{1, i, j, k}`.
///
/// The arithmetic operators panic when the operands' algebras differ; the
/// checked entry points [`Quaternion::try_add`], [`Quaternion::try_sub`] and
/// [`Quaternion::try_mul`] report [`Error::AlgebraMismatch`] instead.
#[derive(Debug, Clone, PartialEq)]
pub struct Quaternion {
    coords: [Scalar; 4],
    params: AlgebraParams,
}

impl Quaternion {
    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn coords(&self) -> &[Scalar; 4] {
        &self.coords
    }

    pub fn x0(&self) -> &Scalar {
        &self.coords[0]
    }

    pub fn x1(&self) -> &Scalar {
        &self.coords[1]
    }

    pub fn x2(&self) -> &Scalar {
        &self.coords[2]
    }

    pub fn x3(&self) -> &Scalar {
        &self.coords[3]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// True when the imaginary coordinates vanish.
    pub fn is_scalar(&self) -> bool {
        self.coords[1].is_zero() && self.coords[2].is_zero() && self.coords[3].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.is_scalar()
    }

    fn check_params(&self, rhs: &Self) -> Result<()> {
        if self.params == rhs.params {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch {
                left: self.params.to_string(),
                right: rhs.params.to_string(),
            })
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_params(rhs)?;
        Ok(self.add_ref(rhs))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_params(rhs)?;
        Ok(self.sub_ref(rhs))
    }

    /// The bilinear product of the algebra.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_params(rhs)?;
        Ok(self.mul_ref(rhs))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let c = &self.coords;
        let d = &rhs.coords;
        Quaternion {
            coords: [&c[0] + &d[0], &c[1] + &d[1], &c[2] + &d[2], &c[3] + &d[3]],
            params: self.params.clone(),
        }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let c = &self.coords;
        let d = &rhs.coords;
        Quaternion {
            coords: [&c[0] - &d[0], &c[1] - &d[1], &c[2] - &d[2], &c[3] - &d[3]],
            params: self.params.clone(),
        }
    }

    pub(crate) fn mul_ref(&self, rhs: &Self) -> Self {
        let [x0, x1, x2, x3] = &self.coords;
        let [y0, y1, y2, y3] = &rhs.coords;
        let a = &self.params.a;
        let b = &self.params.b;
        let ab = a * b;

        // z0 = x0y0 + a x1y1 + b x2y2 − ab x3y3
        let z0 = &(&(&(x0 * y0) + &(a * &(x1 * y1))) + &(b * &(x2 * y2))) - &(&ab * &(x3 * y3));
        // z1 = x0y1 + x1y0 + b (x3y2 − x2y3)
        let z1 = &(&(x0 * y1) + &(x1 * y0)) + &(b * &(&(x3 * y2) - &(x2 * y3)));
        // z2 = x0y2 + x2y0 + a (x1y3 − x3y1)
        let z2 = &(&(x0 * y2) + &(x2 * y0)) + &(a * &(&(x1 * y3) - &(x3 * y1)));
        // z3 = x0y3 + x3y0 + x1y2 − x2y1
        let z3 = &(&(&(x0 * y3) + &(x3 * y0)) + &(x1 * y2)) - &(x2 * y1);

        Quaternion {
            coords: [z0, z1, z2, z3],
            params: self.params.clone(),
        }
    }

    /// Conjugate `t(q) − q = (x0, −x1, −x2, −x3)`; an involution and an
    /// anti-automorphism of the algebra.
    pub fn conj(&self) -> Self {
        let c = &self.coords;
        Quaternion {
            coords: [c[0].clone(), -&c[1], -&c[2], -&c[3]],
            params: self.params.clone(),
        }
    }

    /// Trace `t(q) = q + conj(q) = 2·x0`, returned as a quaternion with zero
    /// imaginary part. Satisfies `t(pq) = t(qp)`.
    pub fn trace(&self) -> Self {
        let two_x0 = &self.coords[0] + &self.coords[0];
        let z = Scalar::zero(self.params.kind());
        Quaternion {
            coords: [two_x0, z.clone(), z.clone(), z],
            params: self.params.clone(),
        }
    }

    /// Norm `n(q) = q·conj(q) = x0² − a·x1² − b·x2² + ab·x3²` as a field
    /// element. Multiplicative: `n(pq) = n(p)·n(q)`.
    pub fn norm(&self) -> Scalar {
        let [x0, x1, x2, x3] = &self.coords;
        let a = &self.params.a;
        let b = &self.params.b;
        let ab = a * b;
        &(&(&(x0 * x0) - &(a * &(x1 * x1))) - &(b * &(x2 * x2))) + &(&ab * &(x3 * x3))
    }

    /// Inverse `conj(q)/n(q)`; errors when `n(q) = 0` (zero or a zero
    /// divisor of a splittable algebra).
    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NotInvertible {
                norm: n.to_string(),
            });
        }
        let n_inv = n.inv()?;
        Ok(self.conj().scale(&n_inv))
    }

    /// Componentwise product with a (central) field element.
    pub fn scale(&self, s: &Scalar) -> Self {
        Quaternion {
            coords: [
                &self.coords[0] * s,
                &self.coords[1] * s,
                &self.coords[2] * s,
                &self.coords[3] * s,
            ],
            params: self.params.clone(),
        }
    }

    /// Mode-aware equality: exact on rationals, tolerance-based on float64.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.params == other.params
            && self
                .coords
                .iter()
                .zip(other.coords.iter())
                .all(|(x, y)| x.approx_eq(y))
    }

    /// Parses the textual form `x0,x1,x2,x3` in the backend of `params`.
    pub fn parse(s: &str, params: &AlgebraParams) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::parse(format!(
                "quaternion needs 4 comma-separated components, got {} in {s:?}",
                parts.len()
            )));
        }
        let kind = params.kind();
        let mut coords = Vec::with_capacity(4);
        for p in parts {
            coords.push(Scalar::parse(p, kind)?);
        }
        params.quaternion([
            coords[0].clone(),
            coords[1].clone(),
            coords[2].clone(),
            coords[3].clone(),
        ])
    }
}

impl fmt::Display for Quaternion {
    /// The textual form used in files and on the command line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            self.coords[0], self.coords[1], self.coords[2], self.coords[3]
        )
    }
}

macro_rules! quat_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&Quaternion> for &Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: &Quaternion) -> Quaternion {
                assert!(
                    self.params == rhs.params,
                    "algebra mismatch: {} vs {}",
                    self.params,
                    rhs.params
                );
                self.$impl_fn(rhs)
            }
        }

        impl $trait<Quaternion> for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: Quaternion) -> Quaternion {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

quat_binop!(Add, add, add_ref);
quat_binop!(Sub, sub, sub_ref);
quat_binop!(Mul, mul, mul_ref);

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion {
            coords: [
                -&self.coords[0],
                -&self.coords[1],
                -&self.coords[2],
                -&self.coords[3],
            ],
            params: self.params.clone(),
        }
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}
