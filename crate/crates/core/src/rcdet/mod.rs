//! Row and column determinants and everything built on them: cofactor
//! expansions, the Moore determinant, determinants of Hermitian matrices,
//! double determinants and double cofactors, the adjoint-style inverse,
//! Cramer solvers for one-sided systems, and ranks.
//!
//! A row determinant `rdet_i A` is the alternating sum over all `n!`
//! permutations of monomials whose factors are ordered by the left-ordered
//! cycle decomposition anchored at row `i`; `cdet_j A` is the mirror
//! construction with factors written right to left. The two families agree
//! with the classical determinant as soon as the entries commute, and on
//! Hermitian matrices all `2n` of them coincide with the Moore determinant.

mod enumerate;
mod cofactor;
mod hermitian;
mod properties;
mod rank;
mod solve;

pub use cofactor::{
    cdet_by_expansion, cdet_by_expansion_opt, left_cofactor, left_cofactor_opt, rdet_by_expansion,
    rdet_by_expansion_opt, right_cofactor, right_cofactor_opt,
};
pub use enumerate::{cdet, cdet_opt, cdet_via_adjoint, rdet, rdet_opt, DetKind, DetReport};
pub use hermitian::{
    ddet, ddet_opt, double_cofactors, double_cofactors_opt, hermitian_det, hermitian_det_opt,
    inverse, inverse_opt, mdet, mdet_opt, DoubleCofactors,
};
pub use properties::{basic_property_checks, basic_property_checks_opt, PropertyCheck, PropertyReport};
pub use rank::{principal_minor_rank, principal_minor_rank_opt, rank};
pub use solve::{
    solve_left, solve_left_hermitian, solve_left_hermitian_opt, solve_left_opt, solve_right,
    solve_right_hermitian, solve_right_hermitian_opt, solve_right_opt,
};

/// Knobs shared by the determinant operations.
#[derive(Debug, Clone)]
pub struct DetOptions {
    /// Direct enumeration over `S_n` is refused above this dimension
    /// (default 9, i.e. at most 362880 monomials) unless raised explicitly.
    pub max_enum_dim: usize,
    /// Verify on every Hermitian determinant that all `2n` row and column
    /// determinants agree (costs a factor of `2n`). Defaults to on in debug
    /// builds, off in release.
    pub check_hermitian_agreement: bool,
    /// Worker threads for the permutation sum; `0` and `1` both mean
    /// sequential. In rational mode the result is bit-identical for every
    /// worker count; in float mode partial sums are reduced in fixed chunk
    /// order to keep the output deterministic.
    pub workers: usize,
}

impl Default for DetOptions {
    fn default() -> Self {
        DetOptions {
            max_enum_dim: 9,
            check_hermitian_agreement: cfg!(debug_assertions),
            workers: 1,
        }
    }
}

impl DetOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_max_enum_dim(mut self, max: usize) -> Self {
        self.max_enum_dim = max;
        self
    }

    pub fn with_hermitian_agreement(mut self, check: bool) -> Self {
        self.check_hermitian_agreement = check;
        self
    }
}
