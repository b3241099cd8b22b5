//! Elements of the base field: exact rationals (default) or `f64` (opt-in).
//!
//! The backend is chosen at construction time and never coerced. Binary
//! operations on mixed backends panic; the public entry points of the crate
//! validate backend agreement up front and return [`Error::BackendMismatch`]
//! instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which arithmetic backend a [`Scalar`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarKind {
    Rational,
    Float64,
}

impl ScalarKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ScalarKind::Rational => "rational",
            ScalarKind::Float64 => "float64",
        }
    }
}

impl FromStr for ScalarKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(ScalarKind::Rational),
            "float64" => Ok(ScalarKind::Float64),
            other => Err(Error::parse(format!("unknown scalar kind {other:?}"))),
        }
    }
}

/// One element of the base field.
///
/// Rational values are kept in lowest terms with positive denominator
/// (enforced by `BigRational`). Equality is structural and exact; use
/// [`Scalar::approx_eq`] for the mode-aware comparison.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Rational(BigRational),
    Float(f64),
}

/// Relative/absolute tolerance for float64 equality.
pub const FLOAT_EQ_TOLERANCE: f64 = 1e-9;

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Rational(_) => ScalarKind::Rational,
            Scalar::Float(_) => ScalarKind::Float64,
        }
    }

    pub fn zero(kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Rational => Scalar::Rational(BigRational::zero()),
            ScalarKind::Float64 => Scalar::Float(0.0),
        }
    }

    pub fn one(kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Rational => Scalar::Rational(BigRational::one()),
            ScalarKind::Float64 => Scalar::Float(1.0),
        }
    }

    /// Integer embedded into the given backend.
    pub fn from_i64(v: i64, kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            ScalarKind::Float64 => Scalar::Float(v as f64),
        }
    }

    /// Exact rational `num/den`; `den` must be nonzero.
    pub fn rational(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::parse("zero denominator"));
        }
        Ok(Scalar::Rational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    pub fn float(v: f64) -> Self {
        Scalar::Float(v)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Float(v) => *v == 0.0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Float(v) => *v == 1.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Float(v) => *v < 0.0,
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible {
                norm: self.to_string(),
            });
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Float(v) => Scalar::Float(1.0 / v),
        })
    }

    /// Mode-aware equality: exact for rationals, tolerance
    /// `|Δ| ≤ 1e-9·(1+magnitude)` for float64.
    pub fn approx_eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Float(a), Scalar::Float(b)) => {
                let magnitude = a.abs().max(b.abs());
                (a - b).abs() <= FLOAT_EQ_TOLERANCE * (1.0 + magnitude)
            }
            _ => false,
        }
    }

    /// Total order on values of one backend; panics on mixed backends.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Float(a), Scalar::Float(b)) => {
                a.partial_cmp(b).expect("non-finite float in comparison")
            }
            _ => panic!("mixed scalar backends"),
        }
    }

    /// Compare absolute values (pivot-magnitude order).
    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.abs().cmp(&b.abs()),
            (Scalar::Float(a), Scalar::Float(b)) => a
                .abs()
                .partial_cmp(&b.abs())
                .expect("non-finite float in comparison"),
            _ => panic!("mixed scalar backends"),
        }
    }

    /// Parse in the textual field-element form: `p`, `p/q`, or a decimal
    /// float when `kind` is float64.
    pub fn parse(s: &str, kind: ScalarKind) -> Result<Self> {
        let s = s.trim();
        match kind {
            ScalarKind::Rational => {
                let mk_err = || Error::parse(format!("invalid rational {s:?}"));
                match s.split_once('/') {
                    Some((num, den)) => {
                        let num = BigInt::from_str(num.trim()).map_err(|_| mk_err())?;
                        let den = BigInt::from_str(den.trim()).map_err(|_| mk_err())?;
                        if den.is_zero() {
                            return Err(Error::parse(format!("zero denominator in {s:?}")));
                        }
                        Ok(Scalar::Rational(BigRational::new(num, den)))
                    }
                    None => {
                        let num = BigInt::from_str(s).map_err(|_| mk_err())?;
                        Ok(Scalar::Rational(BigRational::from_integer(num)))
                    }
                }
            }
            ScalarKind::Float64 => {
                let v = f64::from_str(s)
                    .map_err(|_| Error::parse(format!("invalid float {s:?}")))?;
                if !v.is_finite() {
                    return Err(Error::parse(format!("non-finite float {s:?}")));
                }
                Ok(Scalar::Float(v))
            }
        }
    }

    fn binop(
        &self,
        rhs: &Self,
        fr: impl Fn(&BigRational, &BigRational) -> BigRational,
        ff: impl Fn(f64, f64) -> f64,
    ) -> Self {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(fr(a, b)),
            (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(ff(*a, *b)),
            _ => panic!("mixed scalar backends"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // Ratio prints `p` when the denominator is one, else `p/q`.
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Float(v) => write!(f, "{v}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a + b, |a, b| a + b)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a - b, |a, b| a - b)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a * b, |a, b| a * b)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero scalar");
        self.binop(rhs, |a, b| a / b, |a, b| a / b)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Float(v) => Scalar::Float(-v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rational(n, d).unwrap()
    }

    #[test]
    fn rational_is_reduced_with_positive_denominator() {
        let s = q(4, -6);
        assert_eq!(s.to_string(), "-2/3");
        assert_eq!(q(9, 3).to_string(), "3");
        assert_eq!(q(0, 5), Scalar::zero(ScalarKind::Rational));
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["0", "-7", "3/2", "-11/17"] {
            let s = Scalar::parse(text, ScalarKind::Rational).unwrap();
            assert_eq!(s.to_string(), text);
        }
        let f = Scalar::parse("-0.25", ScalarKind::Float64).unwrap();
        assert_eq!(f.to_string(), "-0.25");
        assert!(Scalar::parse("1.5", ScalarKind::Rational).is_err());
        assert!(Scalar::parse("1/0", ScalarKind::Rational).is_err());
        assert!(Scalar::parse("inf", ScalarKind::Float64).is_err());
    }

    #[test]
    fn inv_errors_on_zero() {
        assert!(Scalar::zero(ScalarKind::Rational).inv().is_err());
        assert_eq!(q(2, 1).inv().unwrap(), q(1, 2));
    }

    #[test]
    fn float_approx_eq_uses_relative_tolerance() {
        let a = Scalar::float(1.0);
        let b = Scalar::float(1.0 + 1e-12);
        assert!(a.approx_eq(&b));
        assert!(!a.approx_eq(&Scalar::float(1.1)));
        // Exact equality on rationals.
        assert!(q(1, 3).approx_eq(&q(1, 3)));
        assert!(!q(1, 3).approx_eq(&q(1, 4)));
    }

    #[test]
    #[should_panic(expected = "mixed scalar backends")]
    fn mixed_backend_arithmetic_panics() {
        let _ = &q(1, 1) + &Scalar::float(1.0);
    }
}
