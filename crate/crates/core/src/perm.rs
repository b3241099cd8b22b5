//! Permutations and their ordered disjoint-cycle decompositions.
//!
//! Row and column determinants assign to every permutation a monomial whose
//! factor order is dictated by a normalized cycle decomposition:
//!
//! * **left-ordered** with leader `i`: the cycle containing `i` comes first
//!   and starts with `i`; every other cycle starts with its minimal element
//!   and the cycles are sorted by those minima, ascending;
//! * **right-ordered** with leader `j`: the mirror image — same cycle list,
//!   but each cycle is reversed (so its anchor closes it on the right) and
//!   the monomial is read from the rightmost block to the left.
//!
//! Fixed points count as 1-cycles, so the permutation sign is `(−1)^(n−r)`
//! where `r` is the number of cycles.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, …, n−1}` stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Validates that `images` is a bijection on `{0, …, n−1}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(Error::InvalidPermutation {
                    detail: format!("image {v} out of range for degree {n}"),
                });
            }
            if seen[v] {
                return Err(Error::InvalidPermutation {
                    detail: format!("image {v} repeated"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles; indices not
    /// mentioned are fixed points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from >= n || used[from] {
                    return Err(Error::InvalidPermutation {
                        detail: format!("index {from} out of range or repeated"),
                    });
                }
                used[from] = true;
                images[from] = to;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }
}

/// Whether cycle anchors lead from the left or close from the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleOrder {
    Left,
    Right,
}

/// A cycle decomposition normalized to the left- or right-ordered convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedCycles {
    cycles: Vec<Vec<usize>>,
    leader: usize,
    n: usize,
    order: CycleOrder,
}

impl OrderedCycles {
    /// Left-ordered decomposition anchored at `leader`.
    pub fn left_ordered(p: &Permutation, leader: usize) -> Result<Self> {
        let n = p.degree();
        if leader >= n {
            return Err(Error::IndexOutOfRange {
                index: leader,
                bound: n,
                axis: "leader",
            });
        }
        let mut visited = vec![false; n];
        let walk = |start: usize, visited: &mut Vec<bool>| -> Vec<usize> {
            let mut cycle = vec![start];
            visited[start] = true;
            let mut cur = p.apply(start);
            while cur != start {
                visited[cur] = true;
                cycle.push(cur);
                cur = p.apply(cur);
            }
            cycle
        };

        let mut cycles = vec![walk(leader, &mut visited)];
        for m in 0..n {
            if !visited[m] {
                // Ascending scan: m is the minimum of its cycle.
                cycles.push(walk(m, &mut visited));
            }
        }
        Ok(OrderedCycles {
            cycles,
            leader,
            n,
            order: CycleOrder::Left,
        })
    }

    /// Right-ordered decomposition anchored at `leader`: each cycle of the
    /// left-ordered form reversed, so its anchor closes it.
    pub fn right_ordered(p: &Permutation, leader: usize) -> Result<Self> {
        let mut oc = Self::left_ordered(p, leader)?;
        for cycle in &mut oc.cycles {
            cycle.reverse();
        }
        oc.order = CycleOrder::Right;
        Ok(oc)
    }

    /// Number of disjoint cycles `r`, fixed points included.
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn leader(&self) -> usize {
        self.leader
    }

    pub fn order(&self) -> CycleOrder {
        self.order
    }

    /// Leader cycle first, the rest sorted by minimal element ascending.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// The permutation sign `(−1)^(n−r)`.
    pub fn sign(&self) -> i8 {
        if (self.n - self.cycles.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for OrderedCycles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (idx, v) in cycle.iter().enumerate() {
                if idx > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// `n!` as a `u64`; callers keep `n` small enough (≤ 20).
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Writes the permutation of `{0,…,n−1}` with the given lexicographic rank
/// into `out` (factorial number system).
pub fn unrank_permutation(n: usize, mut rank: u64, out: &mut Vec<usize>) {
    let mut digits = vec![0u64; n];
    for i in (1..=n).rev() {
        let f = factorial(i - 1);
        digits[n - i] = rank / f;
        rank %= f;
    }
    let mut pool: Vec<usize> = (0..n).collect();
    out.clear();
    for d in digits {
        out.push(pool.remove(d as usize));
    }
}

/// Advances `p` to its lexicographic successor; returns `false` after the
/// last permutation.
pub fn next_permutation(p: &mut [usize]) -> bool {
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

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn identity_decomposes_into_fixed_points() {
        let p = Permutation::identity(3);
        let oc = OrderedCycles::left_ordered(&p, 0).unwrap();
        assert_eq!(oc.cycles(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(oc.cycle_count(), 3);
        assert_eq!(oc.sign(), 1);
    }

    #[test]
    fn leader_rotates_its_cycle_to_front() {
        // The 3-cycle 0→1→2→0 anchored at 1 reads (1 2 0).
        let p = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let oc = OrderedCycles::left_ordered(&p, 1).unwrap();
        assert_eq!(oc.cycles(), &[vec![1, 2, 0]]);
        assert_eq!(oc.cycle_count(), 1);
        assert_eq!(oc.sign(), 1); // (−1)^(3−1)
    }

    #[test]
    fn non_leader_cycles_sorted_by_minimum() {
        // (0 1)(2 3) anchored at 2: leader cycle (2 3) first, then (0 1).
        let p = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        let oc = OrderedCycles::left_ordered(&p, 2).unwrap();
        assert_eq!(oc.cycles(), &[vec![2, 3], vec![0, 1]]);
        assert_eq!(oc.cycle_count(), 2);
        assert_eq!(oc.sign(), 1); // (−1)^(4−2)
    }

    #[test]
    fn right_ordered_reverses_each_cycle() {
        let p = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        let oc = OrderedCycles::right_ordered(&p, 2).unwrap();
        assert_eq!(oc.cycles(), &[vec![3, 2], vec![1, 0]]);
        assert_eq!(oc.sign(), 1);
    }

    #[test]
    fn invalid_permutations_are_rejected() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
        assert!(Permutation::from_cycles(2, &[&[0, 0]]).is_err());
    }

    /// Independent sign oracle: parity of the inversion count.
    fn inversion_sign(images: &[usize]) -> i8 {
        let mut inversions = 0usize;
        for a in 0..images.len() {
            for b in a + 1..images.len() {
                if images[a] > images[b] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn cycle_sign_matches_inversion_parity() {
        let n = 5;
        let mut p: Vec<usize> = (0..n).collect();
        loop {
            let perm = Permutation::from_images(p.clone()).unwrap();
            for leader in 0..n {
                let oc = OrderedCycles::left_ordered(&perm, leader).unwrap();
                assert_eq!(oc.sign(), inversion_sign(&p), "perm {p:?}");
                // Cycles partition {0..n}.
                let mut all: Vec<usize> = oc.cycles().iter().flatten().copied().collect();
                all.sort_unstable();
                assert_eq!(all, (0..n).collect::<Vec<_>>());
                // Leader starts the first cycle; others start at their minimum
                // and are sorted ascending.
                assert_eq!(oc.cycles()[0][0], leader);
                let mins: Vec<usize> = oc.cycles()[1..]
                    .iter()
                    .map(|c| {
                        assert_eq!(c[0], *c.iter().min().unwrap());
                        c[0]
                    })
                    .collect();
                assert!(mins.windows(2).all(|w| w[0] < w[1]));
            }
            if !next_permutation(&mut p) {
                break;
            }
        }
    }

    #[test]
    fn unrank_and_next_cover_sn_exactly_once() {
        let n = 4;
        let total = factorial(n);
        assert_eq!(total, 24);
        let mut seen = HashSet::new();
        let mut buf = Vec::new();
        for rank in 0..total {
            unrank_permutation(n, rank, &mut buf);
            seen.insert(buf.clone());
        }
        assert_eq!(seen.len(), 24);

        // next_permutation visits the same set in lexicographic order.
        let mut p: Vec<usize> = (0..n).collect();
        let mut count = 1;
        let mut prev = p.clone();
        while next_permutation(&mut p) {
            assert!(prev < p);
            prev = p.clone();
            count += 1;
        }
        assert_eq!(count, 24);

        // Unranking agrees with stepping.
        let mut q: Vec<usize> = (0..n).collect();
        for rank in 0..total {
            unrank_permutation(n, rank, &mut buf);
            assert_eq!(buf, q);
            next_permutation(&mut q);
        }
    }
}
