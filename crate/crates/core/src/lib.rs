//! Exact linear algebra over generalized quaternion algebras `H(a,b)`.
//!
//! The crate implements, with exact rational arithmetic by default:
//!
//! * the quaternion algebra `H(a,b)` over a field, with norm, trace,
//!   conjugation and inversion ([`quat`]);
//! * dense matrices over `H(a,b)` with the minor/replacement calculus used
//!   throughout the determinant theory ([`qmatrix`]);
//! * row and column determinants driven by ordered cycle decompositions of
//!   permutations, cofactor expansions, the Moore determinant recursion, the
//!   determinant of a Hermitian matrix, the double determinant, double
//!   cofactors, the adjoint-style inverse, Cramer solvers for one-sided
//!   systems and ranks ([`rcdet`], [`perm`]);
//! * Gelfand–Retakh style quasideterminants, the Hadamard inverse, block
//!   inversion through Schur complements, Gauss-type solving, and the
//!   representation of quasideterminants through row/column determinants
//!   ([`quasidet`]);
//! * a plain-text document format for matrices and linear systems ([`io`]).
//!
//! Scalars are exact arbitrary-precision rationals or opt-in `f64`; the two
//! backends never mix silently. All values are immutable after construction
//! and safe to share across threads.

pub mod error;
pub mod io;
pub mod perm;
pub mod qmatrix;
pub mod quasidet;
pub mod quat;
pub mod rcdet;
pub mod scalar;

pub use error::{Error, Result};
pub use qmatrix::QMatrix;
pub use quat::{AlgebraParams, Quaternion};
pub use scalar::{Scalar, ScalarKind};
