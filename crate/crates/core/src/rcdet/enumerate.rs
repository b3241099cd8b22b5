//! Direct enumeration of row and column determinants over `S_n`.
//!
//! Monomials are evaluated by walking each permutation's cycles in the
//! normalized order of [`crate::perm::OrderedCycles`] without materializing
//! the decomposition. The sum may be split into fixed-size rank chunks and
//! spread over worker threads; partial sums are always reduced in chunk
//! order, which makes float mode deterministic and leaves rational mode
//! bit-identical for every worker count.

use std::thread;

use crate::error::{Error, Result};
use crate::perm::{factorial, next_permutation, unrank_permutation};
use crate::qmatrix::QMatrix;
use crate::quat::Quaternion;

use super::DetOptions;

/// Which determinant a [`DetReport`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetKind {
    Rdet,
    Cdet,
    Mdet,
    Hdet,
    Ddet,
}

impl DetKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DetKind::Rdet => "rdet",
            DetKind::Cdet => "cdet",
            DetKind::Mdet => "mdet",
            DetKind::Hdet => "hdet",
            DetKind::Ddet => "ddet",
        }
    }
}

/// A determinant value together with how it was obtained.
#[derive(Debug, Clone)]
pub struct DetReport {
    pub value: Quaternion,
    pub kind: DetKind,
    /// Anchor row/column for rdet/cdet; `None` for anchor-free kinds.
    pub index: Option<usize>,
    /// Number of monomials in the expansion (`n!` for direct enumeration).
    pub monomial_count: u64,
}

#[derive(Clone, Copy)]
enum Side {
    Row,
    Col,
}

/// Row determinant along row `i` (0-based) with default options.
pub fn rdet(a: &QMatrix, i: usize) -> Result<Quaternion> {
    rdet_opt(a, i, &DetOptions::default())
}

/// Row determinant along row `i` (0-based).
pub fn rdet_opt(a: &QMatrix, i: usize, opts: &DetOptions) -> Result<Quaternion> {
    a.check_square()?;
    if i >= a.rows() {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: a.rows(),
            axis: "row",
        });
    }
    det_sum(a, Side::Row, i, opts)
}

/// Column determinant along column `j` (0-based) with default options.
pub fn cdet(a: &QMatrix, j: usize) -> Result<Quaternion> {
    cdet_opt(a, j, &DetOptions::default())
}

/// Column determinant along column `j` (0-based).
///
/// Computed by direct mirrored enumeration. In debug builds the value is
/// cross-checked against the adjoint route `conj(rdet_j A*)`; disagreement
/// is an [`Error::InternalDisagreement`].
pub fn cdet_opt(a: &QMatrix, j: usize, opts: &DetOptions) -> Result<Quaternion> {
    a.check_square()?;
    if j >= a.cols() {
        return Err(Error::IndexOutOfRange {
            index: j,
            bound: a.cols(),
            axis: "column",
        });
    }
    let value = det_sum(a, Side::Col, j, opts)?;
    #[cfg(debug_assertions)]
    {
        let via_adjoint = det_sum(&a.hermitian_adjoint(), Side::Row, j, opts)?.conj();
        if value != via_adjoint && !value.approx_eq(&via_adjoint) {
            return Err(Error::InternalDisagreement {
                context: format!(
                    "cdet_{j} enumeration gave {value}, adjoint route gave {via_adjoint}"
                ),
            });
        }
    }
    Ok(value)
}

/// The adjoint route `cdet_j A = conj(rdet_j A*)`, kept as an independent
/// oracle for the enumeration path.
pub fn cdet_via_adjoint(a: &QMatrix, j: usize) -> Result<Quaternion> {
    a.check_square()?;
    Ok(rdet(&a.hermitian_adjoint(), j)?.conj())
}

/// `n!` monomials, chunked and summed in fixed order.
fn det_sum(a: &QMatrix, side: Side, anchor: usize, opts: &DetOptions) -> Result<Quaternion> {
    let n = a.rows();
    if n > opts.max_enum_dim {
        return Err(Error::EnumerationTooLarge {
            n,
            max: opts.max_enum_dim,
        });
    }
    if n == 1 {
        return Ok(a[(0, 0)].clone());
    }

    let total = factorial(n);
    const CHUNK: u64 = 5040;
    let chunk_count = total.div_ceil(CHUNK);
    let workers = opts.workers.clamp(1, chunk_count as usize);

    let chunk_range = |c: u64| (c * CHUNK, ((c + 1) * CHUNK).min(total));

    if workers <= 1 {
        let mut acc = a.params().zero();
        for c in 0..chunk_count {
            let (start, end) = chunk_range(c);
            acc = &acc + &chunk_sum(a, side, anchor, start, end);
        }
        return Ok(acc);
    }

    // Worker w owns chunks w, w+W, w+2W, …; partials are reassembled and
    // folded in chunk-index order.
    let partials: Vec<(u64, Quaternion)> = thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        for w in 0..workers as u64 {
            let handle = scope.spawn(move || {
                let mut out = Vec::new();
                let mut c = w;
                while c < chunk_count {
                    let (start, end) = chunk_range(c);
                    out.push((c, chunk_sum(a, side, anchor, start, end)));
                    c += workers as u64;
                }
                out
            });
            handles.push(handle);
        }
        let mut all = Vec::with_capacity(chunk_count as usize);
        for handle in handles {
            all.extend(handle.join().expect("determinant worker panicked"));
        }
        all
    });

    let mut slots: Vec<Option<Quaternion>> = vec![None; chunk_count as usize];
    for (c, partial) in partials {
        slots[c as usize] = Some(partial);
    }
    let mut acc = a.params().zero();
    for slot in slots {
        acc = &acc + &slot.expect("every chunk computed");
    }
    Ok(acc)
}

fn chunk_sum(a: &QMatrix, side: Side, anchor: usize, start: u64, end: u64) -> Quaternion {
    let n = a.rows();
    let mut perm = Vec::with_capacity(n);
    unrank_permutation(n, start, &mut perm);
    let mut inv = vec![0usize; n];
    let mut scratch = Scratch::new(n);
    let mut acc = a.params().zero();
    for _ in start..end {
        let term = match side {
            Side::Row => row_monomial(a, &perm, anchor, &mut scratch),
            Side::Col => {
                for (x, &y) in perm.iter().enumerate() {
                    inv[y] = x;
                }
                col_monomial(a, &inv, anchor, &mut scratch)
            }
        };
        acc = &acc + &term;
        next_permutation(&mut perm);
    }
    acc
}

struct Scratch {
    visited: Vec<bool>,
    anchors: Vec<usize>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            visited: vec![false; n],
            anchors: Vec::with_capacity(n),
        }
    }
}

/// Monomial of `rdet_anchor`: walk the leader cycle from the anchor, then
/// the remaining cycles in ascending order of their minima, multiplying
/// `a[c][σ(c)]` along each cycle; sign `(−1)^(n−r)`.
fn row_monomial(a: &QMatrix, sigma: &[usize], anchor: usize, s: &mut Scratch) -> Quaternion {
    let n = sigma.len();
    s.visited.fill(false);
    let mut cycles = 0usize;
    let mut prod: Option<Quaternion> = None;

    let walk = |start: usize, visited: &mut Vec<bool>, prod: &mut Option<Quaternion>| {
        let mut u = start;
        loop {
            let v = sigma[u];
            visited[u] = true;
            let factor = &a[(u, v)];
            *prod = Some(match prod.take() {
                None => factor.clone(),
                Some(p) => p.mul_ref(factor),
            });
            u = v;
            if u == start {
                break;
            }
        }
    };

    walk(anchor, &mut s.visited, &mut prod);
    cycles += 1;
    for m in 0..n {
        if !s.visited[m] {
            walk(m, &mut s.visited, &mut prod);
            cycles += 1;
        }
    }

    let prod = prod.expect("n ≥ 1");
    if (n - cycles) % 2 == 0 {
        prod
    } else {
        -&prod
    }
}

/// Monomial of `cdet_anchor`: blocks of the right-ordered decomposition read
/// right to left, i.e. non-leader cycles by descending minimum walked
/// backwards (`a[u][τ⁻¹(u)]` from each minimum), then the leader cycle
/// walked backwards from the anchor; sign `(−1)^(n−r)`.
fn col_monomial(a: &QMatrix, inv: &[usize], anchor: usize, s: &mut Scratch) -> Quaternion {
    let n = inv.len();
    s.visited.fill(false);
    s.anchors.clear();

    // Mark the leader cycle, then record the minimum of every other cycle.
    {
        let mut u = anchor;
        loop {
            s.visited[u] = true;
            u = inv[u];
            if u == anchor {
                break;
            }
        }
    }
    for m in 0..n {
        if !s.visited[m] {
            s.anchors.push(m);
            let mut u = m;
            loop {
                s.visited[u] = true;
                u = inv[u];
                if u == m {
                    break;
                }
            }
        }
    }
    let cycles = s.anchors.len() + 1;

    let mut prod: Option<Quaternion> = None;
    let walk_backward = |start: usize, prod: &mut Option<Quaternion>| {
        let mut u = start;
        loop {
            let v = inv[u];
            let factor = &a[(u, v)];
            *prod = Some(match prod.take() {
                None => factor.clone(),
                Some(p) => p.mul_ref(factor),
            });
            u = v;
            if u == start {
                break;
            }
        }
    };

    for idx in (0..s.anchors.len()).rev() {
        let m = s.anchors[idx];
        walk_backward(m, &mut prod);
    }
    walk_backward(anchor, &mut prod);

    let prod = prod.expect("n ≥ 1");
    if (n - cycles) % 2 == 0 {
        prod
    } else {
        -&prod
    }
}

impl DetReport {
    /// Report for a directly enumerated determinant of an `n×n` matrix.
    pub fn direct(value: Quaternion, kind: DetKind, index: Option<usize>, n: usize) -> Self {
        DetReport {
            value,
            kind,
            index,
            monomial_count: factorial(n),
        }
    }
}

/// Monomial product for one explicit permutation, assembled through the
/// public [`crate::perm::OrderedCycles`] normalization. Used by tests to pin
/// the fused walkers above to the documented cycle order.
#[cfg(test)]
pub(crate) fn monomial_via_ordered_cycles(
    a: &QMatrix,
    p: &crate::perm::Permutation,
    anchor: usize,
    side_row: bool,
) -> Quaternion {
    use crate::perm::OrderedCycles;
    let oc = if side_row {
        OrderedCycles::left_ordered(p, anchor).unwrap()
    } else {
        OrderedCycles::right_ordered(p, anchor).unwrap()
    };
    let mut factors: Vec<Quaternion> = Vec::new();
    if side_row {
        for cycle in oc.cycles() {
            for w in 0..cycle.len() {
                let u = cycle[w];
                let v = cycle[(w + 1) % cycle.len()];
                factors.push(a[(u, v)].clone());
            }
        }
    } else {
        // Right-ordered blocks read right to left; within a stored block
        // (d0 … d_{l−1}, anchor last) the factors wrap from the anchor.
        for cycle in oc.cycles().iter().rev() {
            let l = cycle.len();
            for w in 0..l {
                let u = cycle[(l - 1 + w) % l];
                let v = cycle[w % l];
                factors.push(a[(u, v)].clone());
            }
        }
    }
    let mut prod = factors[0].clone();
    for f in &factors[1..] {
        prod = prod.mul_ref(f);
    }
    if oc.sign() < 0 {
        -&prod
    } else {
        prod
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{next_permutation, Permutation};
    use crate::quat::AlgebraParams;

    fn hamilton() -> AlgebraParams {
        AlgebraParams::rational(-1, -1).unwrap()
    }

    fn running_example(h: &AlgebraParams) -> QMatrix {
        QMatrix::from_rows(vec![vec![h.i(), h.j()], vec![h.j(), -&h.i()]]).unwrap()
    }

    #[test]
    fn all_four_determinants_of_running_example_are_two() {
        let h = hamilton();
        let a = running_example(&h);
        let two = h.quaternion_i64([2, 0, 0, 0]);
        assert_eq!(rdet(&a, 0).unwrap(), two);
        assert_eq!(rdet(&a, 1).unwrap(), two);
        assert_eq!(cdet(&a, 0).unwrap(), two);
        assert_eq!(cdet(&a, 1).unwrap(), two);
    }

    #[test]
    fn determinants_of_identity_are_one() {
        let h = hamilton();
        for n in 1..=4 {
            let id = QMatrix::identity(n, &h).unwrap();
            for idx in 0..n {
                assert!(rdet(&id, idx).unwrap().is_one());
                assert!(cdet(&id, idx).unwrap().is_one());
            }
        }
    }

    #[test]
    fn two_by_two_closed_forms() {
        // rdet_1 = a11·a22 − a12·a21 and cdet_1 = a22·a11 − a12·a21,
        // with the factors of each monomial in exactly that order.
        let h = hamilton();
        let e = |c: [i64; 4]| h.quaternion_i64(c);
        let (a11, a12, a21, a22) = (e([1, 2, -1, 0]), e([0, 1, 1, 3]), e([2, -2, 0, 1]), e([1, 1, 1, 1]));
        let a = QMatrix::from_rows(vec![
            vec![a11.clone(), a12.clone()],
            vec![a21.clone(), a22.clone()],
        ])
        .unwrap();
        let rdet1 = &a11.mul_ref(&a22) - &a12.mul_ref(&a21);
        let cdet1 = &a22.mul_ref(&a11) - &a12.mul_ref(&a21);
        assert_eq!(rdet(&a, 0).unwrap(), rdet1);
        assert_eq!(cdet(&a, 0).unwrap(), cdet1);
        // For noncommuting entries the two genuinely differ.
        assert_ne!(rdet1, cdet1);
    }

    #[test]
    fn fused_walkers_match_ordered_cycles_normalization() {
        let h = hamilton();
        let n = 4;
        let a = QMatrix::from_fn(n, n, &h, |r, c| {
            h.quaternion_i64([
                (r * n + c) as i64 + 1,
                r as i64 - c as i64,
                ((r + 2 * c) % 3) as i64,
                if (r + c) % 2 == 0 { 1 } else { -1 },
            ])
        })
        .unwrap();

        let mut images: Vec<usize> = (0..n).collect();
        let mut scratch = Scratch::new(n);
        let mut inv = vec![0usize; n];
        loop {
            let p = Permutation::from_images(images.clone()).unwrap();
            for anchor in 0..n {
                let via_walker = row_monomial(&a, &images, anchor, &mut scratch);
                let via_cycles = monomial_via_ordered_cycles(&a, &p, anchor, true);
                assert_eq!(via_walker, via_cycles);

                for (x, &y) in images.iter().enumerate() {
                    inv[y] = x;
                }
                let via_walker = col_monomial(&a, &inv, anchor, &mut scratch);
                let via_cycles = monomial_via_ordered_cycles(&a, &p, anchor, false);
                assert_eq!(via_walker, via_cycles);
            }
            if !next_permutation(&mut images) {
                break;
            }
        }
    }

    #[test]
    fn conj_duality_on_small_random_matrices() {
        let h = hamilton();
        let a = QMatrix::from_fn(3, 3, &h, |r, c| {
            h.quaternion_i64([
                1 + r as i64,
                c as i64 - 1,
                (r * c) as i64,
                ((r + c) % 2) as i64,
            ])
        })
        .unwrap();
        let adj = a.hermitian_adjoint();
        for idx in 0..3 {
            assert_eq!(rdet(&adj, idx).unwrap(), cdet(&a, idx).unwrap().conj());
            assert_eq!(cdet_via_adjoint(&a, idx).unwrap(), cdet(&a, idx).unwrap());
        }
    }

    #[test]
    fn zero_row_kills_every_determinant() {
        let h = hamilton();
        let mut rows = Vec::new();
        for r in 0..3 {
            let mut row = Vec::new();
            for c in 0..3 {
                row.push(if r == 1 {
                    h.zero()
                } else {
                    h.quaternion_i64([r as i64, c as i64, 1, -1])
                });
            }
            rows.push(row);
        }
        let a = QMatrix::from_rows(rows).unwrap();
        for idx in 0..3 {
            assert!(rdet(&a, idx).unwrap().is_zero());
            assert!(cdet(&a, idx).unwrap().is_zero());
        }
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let h = hamilton();
        let a = QMatrix::identity(5, &h).unwrap();
        let tight = DetOptions::default().with_max_enum_dim(4);
        assert!(matches!(
            rdet_opt(&a, 0, &tight),
            Err(Error::EnumerationTooLarge { n: 5, max: 4 })
        ));
        let loose = DetOptions::default().with_max_enum_dim(5);
        assert!(rdet_opt(&a, 0, &loose).unwrap().is_one());
    }

    #[test]
    fn parallel_sum_is_bit_identical() {
        let h = hamilton();
        let a = QMatrix::from_fn(6, 6, &h, |r, c| {
            h.quaternion_i64([
                (r + c) as i64,
                (r as i64) - 2 * (c as i64),
                ((r * c) % 5) as i64 - 2,
                ((r + 3 * c) % 7) as i64,
            ])
        })
        .unwrap();
        let sequential = rdet(&a, 2).unwrap();
        for workers in [2, 4, 7] {
            let opts = DetOptions::default().with_workers(workers);
            assert_eq!(rdet_opt(&a, 2, &opts).unwrap(), sequential);
            assert_eq!(
                cdet_opt(&a, 2, &opts).unwrap(),
                cdet(&a, 2).unwrap()
            );
        }
    }
}
