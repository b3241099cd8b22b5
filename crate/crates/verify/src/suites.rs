//! The invariant suites. Each suite draws deterministic instances from the
//! battery seed, checks one family of identities exactly, and reports the
//! first counterexample (with a reproducer document) if any check fails.

use ncdet_core::io::{write_qmat, write_qsys, Side, System};
use ncdet_core::perm::{next_permutation, OrderedCycles, Permutation};
use ncdet_core::quasidet::{
    quasi_solve, quasi_solve_left, quasideterminant_opt, quasidet_via_inverse_opt,
    quasidet_via_rc_opt, QuasiPair, QuasiResult,
};
use ncdet_core::rcdet::{
    basic_property_checks_opt, cdet_by_expansion_opt, cdet_opt, ddet_opt, double_cofactors_opt,
    hermitian_det_opt, inverse_opt, mdet_opt, principal_minor_rank_opt, rank, rdet_by_expansion_opt,
    rdet_opt, solve_left_hermitian_opt, solve_left_opt, solve_right_hermitian_opt, solve_right_opt,
    DetOptions,
};
use ncdet_core::{QMatrix, Quaternion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gen::{hamilton, Gen};
use crate::oracles::{classical_det, scalar_parts};
use crate::report::{BatteryReport, Reproducer, Scale, SuiteReport};

type Failure = (String, Option<Reproducer>);
type SuiteFn = fn(&mut ChaCha8Rng, Scale, &DetOptions) -> Result<usize, Failure>;

const SUITES: &[(&str, SuiteFn)] = &[
    ("scalar-field-laws", scalar_field_laws),
    ("quat-multiplication-table", quat_multiplication_table),
    ("quat-conj-norm-trace", quat_conj_norm_trace),
    ("matrix-adjoint-product", matrix_adjoint_product),
    ("perm-cycle-normalization", perm_cycle_normalization),
    ("det-running-example", det_running_example),
    ("det-commutative-degeneration", det_commutative_degeneration),
    ("det-hermitian-equality", det_hermitian_equality),
    ("det-conj-duality", det_conj_duality),
    ("det-cofactor-expansion", det_cofactor_expansion),
    ("det-elementary-laws", det_elementary_laws),
    ("ddet-multiplicativity-and-gram", ddet_multiplicativity_and_gram),
    ("inverse-and-double-cofactors", inverse_and_double_cofactors),
    ("solver-agreement", solver_agreement),
    ("rank-consistency", rank_consistency),
    ("quasidet-three-way", quasidet_three_way),
    ("io-round-trip", io_round_trip),
];

/// Runs every suite at the given scale. Suites are seeded independently
/// from the battery seed, so the report is reproducible byte for byte; in
/// rational mode the worker count cannot change any value.
pub fn run_all(scale: Scale, seed: u64, workers: usize) -> BatteryReport {
    let opts = DetOptions::default()
        .with_workers(workers.max(1))
        .with_hermitian_agreement(true);
    let mut suites = Vec::with_capacity(SUITES.len());
    for (index, (name, f)) in SUITES.iter().enumerate() {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let report = match f(&mut rng, scale, &opts) {
            Ok(cases) => SuiteReport::pass(name, cases),
            Err((message, reproducer)) => SuiteReport::fail(name, 0, message, reproducer),
        };
        suites.push(report);
    }
    BatteryReport {
        seed,
        scale,
        suites,
    }
}

fn fail_with_matrix(message: impl Into<String>, name: &str, m: &QMatrix) -> Failure {
    (
        message.into(),
        Some(Reproducer {
            file_name: format!("ncdet-repro-{name}.qmat"),
            contents: write_qmat(m),
        }),
    )
}

fn fail_with_system(message: impl Into<String>, name: &str, sys: &System) -> Failure {
    (
        message.into(),
        Some(Reproducer {
            file_name: format!("ncdet-repro-{name}.qsys"),
            contents: write_qsys(sys),
        }),
    )
}

fn quats_as_row(quats: &[Quaternion]) -> QMatrix {
    QMatrix::from_rows(vec![quats.to_vec()]).unwrap()
}

fn scalar_field_laws(rng: &mut ChaCha8Rng, scale: Scale, _opts: &DetOptions) -> Result<usize, Failure> {
    let cases = scale.cases(200, 1000);
    let mut g = Gen::new(rng);
    for _ in 0..cases {
        let (a, b, c) = (g.scalar(), g.scalar(), g.scalar());
        let assoc = &(&a + &b) + &c == &a + &(&b + &c) && &(&a * &b) * &c == &a * &(&b * &c);
        let comm = &a + &b == &b + &a && &a * &b == &b * &a;
        let distr = &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
        if !(assoc && comm && distr) {
            return Err((format!("field law failed on {a}, {b}, {c}"), None));
        }
    }
    Ok(cases)
}

fn quat_multiplication_table(
    rng: &mut ChaCha8Rng,
    scale: Scale,
    _opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let (i, j, k) = (h.i(), h.j(), h.k());
    // The four stated rules and the five derived entries over H(−1,−1).
    let table = [
        (&i * &i, -&h.one(), "i²"),
        (&j * &j, -&h.one(), "j²"),
        (&i * &j, k.clone(), "ij"),
        (&j * &i, -&k, "ji"),
        (&k * &k, -&h.one(), "k²"),
        (&i * &k, -&j, "ik"),
        (&k * &i, j.clone(), "ki"),
        (&k * &j, -&i, "kj"),
        (&j * &k, i.clone(), "jk"),
    ];
    for (got, want, name) in table {
        if got != want {
            return Err((format!("{name} = {got}, expected {want}"), None));
        }
    }

    let cases = scale.cases(100, 500);
    let mut g = Gen::new(rng);
    for _ in 0..cases {
        let (p, q, r) = (g.quat(&h), g.quat(&h), g.quat(&h));
        if &(&p * &q) * &r != &p * &(&q * &r) {
            return Err(fail_with_matrix(
                "associativity failed",
                "quat-multiplication-table",
                &quats_as_row(&[p, q, r]),
            ));
        }
        if &h.one() * &p != p {
            return Err(("unit element failed".into(), None));
        }
    }
    Ok(cases + 9)
}

fn quat_conj_norm_trace(
    rng: &mut ChaCha8Rng,
    scale: Scale,
    _opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let cases = scale.cases(100, 500);
    let mut g = Gen::new(rng);
    for _ in 0..cases {
        let (p, q) = (g.quat(&h), g.quat(&h));
        let pq = &p * &q;
        if pq.trace() != (&q * &p).trace() {
            return Err(fail_with_matrix(
                "t(pq) ≠ t(qp)",
                "quat-conj-norm-trace",
                &quats_as_row(&[p, q]),
            ));
        }
        if pq.norm() != &p.norm() * &q.norm() {
            return Err(fail_with_matrix(
                "n(pq) ≠ n(p)n(q)",
                "quat-conj-norm-trace",
                &quats_as_row(&[p, q]),
            ));
        }
        if pq.conj() != &q.conj() * &p.conj() {
            return Err(fail_with_matrix(
                "conj(pq) ≠ conj(q)conj(p)",
                "quat-conj-norm-trace",
                &quats_as_row(&[p, q]),
            ));
        }
        // Rearrangement identity under the trace.
        let (a11, a12, a21, a22) = (g.quat(&h), g.quat(&h), g.quat(&h), g.quat(&h));
        let lhs = (&(&a12 * &a22.conj()) * &(&a21 * &a11.conj()))
            + (&(&a11 * &a21.conj()) * &(&a22 * &a12.conj()));
        let rhs = (&(&a21.conj() * &a22) * &(&a12.conj() * &a11))
            + (&(&a11.conj() * &a12) * &(&a22.conj() * &a21));
        if lhs != rhs {
            return Err(fail_with_matrix(
                "trace rearrangement identity failed",
                "quat-conj-norm-trace",
                &quats_as_row(&[a11, a12, a21, a22]),
            ));
        }
        // Positive definiteness and exact inversion over H(−1,−1).
        let nz = g.nonzero_quat(&h);
        if nz.norm().is_zero() || nz.norm().is_negative() {
            return Err(fail_with_matrix(
                "norm not positive definite",
                "quat-conj-norm-trace",
                &quats_as_row(&[nz]),
            ));
        }
        let inv = nz.inv().map_err(|e| (e.to_string(), None))?;
        if !(&inv * &nz).is_one() {
            return Err(fail_with_matrix(
                "qinv(q)·q ≠ 1",
                "quat-conj-norm-trace",
                &quats_as_row(&[nz]),
            ));
        }
    }
    Ok(cases)
}

fn matrix_adjoint_product(
    rng: &mut ChaCha8Rng,
    scale: Scale,
    _opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let cases = scale.cases(25, 100);
    let mut g = Gen::new(rng);
    for _ in 0..cases {
        let a = g.matrix(2, 3, &h);
        let b = g.matrix(3, 2, &h);
        let c = g.matrix(2, 2, &h);
        if a.hermitian_adjoint().hermitian_adjoint() != a {
            return Err(fail_with_matrix("(A*)* ≠ A", "matrix-adjoint-product", &a));
        }
        let ab = a.matmul(&b).unwrap();
        if ab.hermitian_adjoint()
            != b.hermitian_adjoint().matmul(&a.hermitian_adjoint()).unwrap()
        {
            return Err(fail_with_matrix(
                "(AB)* ≠ B*A*",
                "matrix-adjoint-product",
                &a,
            ));
        }
        if ab.matmul(&c).unwrap() != a.matmul(&b.matmul(&c).unwrap()).unwrap() {
            return Err(fail_with_matrix(
                "matmul not associative",
                "matrix-adjoint-product",
                &a,
            ));
        }
        if !a
            .matmul(&a.hermitian_adjoint())
            .unwrap()
            .is_hermitian()
            .unwrap()
            || !a
                .hermitian_adjoint()
                .matmul(&a)
                .unwrap()
                .is_hermitian()
                .unwrap()
        {
            return Err(fail_with_matrix(
                "Gram product not Hermitian",
                "matrix-adjoint-product",
                &a,
            ));
        }
    }
    Ok(cases)
}

fn perm_cycle_normalization(
    _rng: &mut ChaCha8Rng,
    scale: Scale,
    _opts: &DetOptions,
) -> Result<usize, Failure> {
    let n = scale.cases(4, 5);
    let mut images: Vec<usize> = (0..n).collect();
    let mut cases = 0usize;
    loop {
        let p = Permutation::from_images(images.clone()).unwrap();
        for leader in 0..n {
            let oc = OrderedCycles::left_ordered(&p, leader).unwrap();
            // Sign equals inversion parity.
            let mut odd = false;
            for a in 0..n {
                for b in a + 1..n {
                    if images[a] > images[b] {
                        odd = !odd;
                    }
                }
            }
            let expected = if odd { -1 } else { 1 };
            if oc.sign() != expected {
                return Err((format!("sign mismatch on {images:?}"), None));
            }
            // Partition, leader placement, min-led ordering.
            let mut all: Vec<usize> = oc.cycles().iter().flatten().copied().collect();
            all.sort_unstable();
            if all != (0..n).collect::<Vec<_>>() || oc.cycles()[0][0] != leader {
                return Err((format!("normalization broken on {images:?}"), None));
            }
            let mins: Vec<usize> = oc.cycles()[1..].iter().map(|c| c[0]).collect();
            if !mins.windows(2).all(|w| w[0] < w[1]) {
                return Err((format!("cycle order broken on {images:?}"), None));
            }
            cases += 1;
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    Ok(cases)
}

fn det_running_example(
    _rng: &mut ChaCha8Rng,
    _scale: Scale,
    opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let a = QMatrix::from_rows(vec![vec![h.i(), h.j()], vec![h.j(), -&h.i()]]).unwrap();
    let two = h.quaternion_i64([2, 0, 0, 0]);
    for idx in 0..2 {
        if rdet_opt(&a, idx, opts).unwrap() != two || cdet_opt(&a, idx, opts).unwrap() != two {
            return Err(fail_with_matrix(
                "rdet/cdet of the running example is not 2",
                "det-running-example",
                &a,
            ));
        }
    }
    let gram = a.hermitian_adjoint().matmul(&a).unwrap();
    let expected_gram = QMatrix::from_rows(vec![
        vec![
            h.quaternion_i64([2, 0, 0, 0]),
            h.quaternion_i64([0, 0, 0, -2]),
        ],
        vec![
            h.quaternion_i64([0, 0, 0, 2]),
            h.quaternion_i64([2, 0, 0, 0]),
        ],
    ])
    .unwrap();
    if gram != expected_gram {
        return Err(fail_with_matrix(
            "A*A differs from [[2,−2k],[2k,2]]",
            "det-running-example",
            &a,
        ));
    }
    if !ddet_opt(&a, opts).unwrap().is_zero() {
        return Err(fail_with_matrix("ddet ≠ 0", "det-running-example", &a));
    }
    if rank(&a).unwrap() != 1 {
        return Err(fail_with_matrix("rank ≠ 1", "det-running-example", &a));
    }
    Ok(6)
}

fn det_commutative_degeneration(
    rng: &mut ChaCha8Rng,
    scale: Scale,
    opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let cases = scale.cases(12, 50);
    let max_n = scale.cases(4, 6);
    let mut g = Gen::new(rng);
    for _ in 0..cases {
        let n = g.rng.gen_range(2..=max_n);
        let a = g.real_matrix(n, n, &h);
        let oracle = classical_det(&scalar_parts(&a));
        let expected = h.embed(oracle).unwrap();
        for idx in 0..n {
            if rdet_opt(&a, idx, opts).unwrap() != expected
                || cdet_opt(&a, idx, opts).unwrap() != expected
            {
                return Err(fail_with_matrix(
                    format!("anchor {idx} disagrees with the classical determinant"),
                    "det-commutative-degeneration",
                    &a,
                ));
            }
        }
    }
    Ok(cases)
}

fn det_hermitian_equality(
    rng: &mut ChaCha8Rng,
    scale: Scale,
    opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let cases = scale.cases(10, 50);
    let mut g = Gen::new(rng);
    for _ in 0..cases {
        let n = g.rng.gen_range(2..=4);
        let herm = g.hermitian(n, &h);
        let value = rdet_opt(&herm, 0, opts).unwrap();
        if !value.is_scalar() {
            return Err(fail_with_matrix(
                "Hermitian determinant has an imaginary part",
                "det-hermitian-equality",
                &herm,
            ));
        }
        for idx in 0..n {
            if rdet_opt(&herm, idx, opts).unwrap() != value
                || cdet_opt(&herm, idx, opts).unwrap() != value
            {
                return Err(fail_with_matrix(
                    format!("anchor {idx} breaks the 2n-determinant equality"),
                    "det-hermitian-equality",
                    &herm,
                ));
            }
        }
        if mdet_opt(&herm, opts).unwrap() != value {
            return Err(fail_with_matrix(
                "Moore recursion disagrees",
                "det-hermitian-equality",
                &herm,
            ));
        }
    }
    Ok(cases)
}

fn det_conj_duality(
    rng: &mut ChaCha8Rng,
    scale: Scale,
    opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let cases = scale.cases(10, 50);
    let max_n = scale.cases(4, 5);
    let mut g = Gen::new(rng);
    for _ in 0..cases {
        let n = g.rng.gen_range(2..=max_n);
        let a = g.matrix(n, n, &h);
        let adj = a.hermitian_adjoint();
        for idx in 0..n {
            if rdet_opt(&adj, idx, opts).unwrap() != cdet_opt(&a, idx, opts).unwrap().conj() {
                return Err(fail_with_matrix(
                    format!("rdet_{idx}(A*) ≠ conj(cdet_{idx} A)"),
                    "det-conj-duality",
                    &a,
                ));
            }
        }
    }
    Ok(cases)
}

fn det_cofactor_expansion(
    rng: &mut ChaCha8Rng,
    scale: Scale,
    opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let cases = scale.cases(8, 30);
    let max_n = scale.cases(4, 5);
    let mut g = Gen::new(rng);
    for _ in 0..cases {
        let n = g.rng.gen_range(2..=max_n);
        let a = g.matrix(n, n, &h);
        for idx in 0..n {
            if rdet_by_expansion_opt(&a, idx, opts).unwrap() != rdet_opt(&a, idx, opts).unwrap() {
                return Err(fail_with_matrix(
                    format!("rdet_{idx} expansion disagrees"),
                    "det-cofactor-expansion",
                    &a,
                ));
            }
            if cdet_by_expansion_opt(&a, idx, opts).unwrap() != cdet_opt(&a, idx, opts).unwrap() {
                return Err(fail_with_matrix(
                    format!("cdet_{idx} expansion disagrees"),
                    "det-cofactor-expansion",
                    &a,
                ));
            }
        }
    }
    Ok(cases)
}

fn det_elementary_laws(
    rng: &mut ChaCha8Rng,
    scale: Scale,
    opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let cases = scale.cases(6, 20);
    let mut g = Gen::new(rng);
    for _ in 0..cases {
        let a = g.matrix(3, 3, &h);
        let q = g.nonzero_quat(&h);
        let report = basic_property_checks_opt(&a, &q, opts).unwrap();
        if !report.all_passed() {
            let broken: Vec<&str> = report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name.as_str())
                .collect();
            return Err(fail_with_matrix(
                format!("laws failed: {broken:?}"),
                "det-elementary-laws",
                &a,
            ));
        }
        // A matrix whose last column is a right combination of the others
        // has ddet = 0.
        let base = g.matrix(3, 2, &h);
        let (q0, q1) = (g.quat(&h), g.quat(&h));
        let dependent = QMatrix::from_fn(3, 3, &h, |r, c| {
            if c < 2 {
                base[(r, c)].clone()
            } else {
                (&base[(r, 0)] * &q0) + (&base[(r, 1)] * &q1)
            }
        })
        .unwrap();
        if !ddet_opt(&dependent, opts).unwrap().is_zero() {
            return Err(fail_with_matrix(
                "right-dependent column but ddet ≠ 0",
                "det-elementary-laws",
                &dependent,
            ));
        }
    }
    Ok(cases * 2)
}

fn ddet_multiplicativity_and_gram(
    rng: &mut ChaCha8Rng,
    scale: Scale,
    opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let cases = scale.cases(10, 50);
    let mut g = Gen::new(rng);
    for _ in 0..cases {
        let a = g.matrix(3, 3, &h);
        let b = g.matrix(3, 3, &h);
        let ab = a.matmul(&b).unwrap();
        if ddet_opt(&ab, opts).unwrap() != &ddet_opt(&a, opts).unwrap() * &ddet_opt(&b, opts).unwrap()
        {
            return Err(fail_with_matrix(
                "ddet(AB) ≠ ddet A · ddet B",
                "ddet-multiplicativity-and-gram",
                &a,
            ));
        }
        // det(AA*) = det(A*A) for square A. (The identity does not extend
        // to rectangular shapes: already for A = [a b], det(AA*) =
        // n(a)+n(b) while det(A*A) = 0.)
        let n = g.rng.gen_range(2..=3);
        let c = g.matrix(n, n, &h);
        let adj = c.hermitian_adjoint();
        let left = hermitian_det_opt(&adj.matmul(&c).unwrap(), opts).unwrap();
        let right = hermitian_det_opt(&c.matmul(&adj).unwrap(), opts).unwrap();
        if left != right {
            return Err(fail_with_matrix(
                "det(A*A) ≠ det(AA*) on a square matrix",
                "ddet-multiplicativity-and-gram",
                &c,
            ));
        }
        // 2×2 closed form.
        let d = g.matrix(2, 2, &h);
        let (d00, d01, d10, d11) = (&d[(0, 0)], &d[(0, 1)], &d[(1, 0)], &d[(1, 1)]);
        let trace_term = (&(&(&d00.conj() * d01) * &d11.conj()) * d10).trace();
        let closed = &(&(&d00.norm() * &d11.norm()) + &(&d10.norm() * &d01.norm()))
            - trace_term.x0();
        if ddet_opt(&d, opts).unwrap() != closed {
            return Err(fail_with_matrix(
                "2×2 ddet closed form disagrees",
                "ddet-multiplicativity-and-gram",
                &d,
            ));
        }
    }
    Ok(cases * 3)
}

fn inverse_and_double_cofactors(
    rng: &mut ChaCha8Rng,
    scale: Scale,
    opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let cases = scale.cases(8, 30);
    let mut g = Gen::new(rng);
    for case in 0..cases {
        let n = if case % 3 == 0 { 4 } else { 3 };
        let a = g.invertible(n, &h);
        let inv = inverse_opt(&a, opts).unwrap();
        let id = QMatrix::identity(n, &h).unwrap();
        if a.matmul(&inv).unwrap() != id || inv.matmul(&a).unwrap() != id {
            return Err(fail_with_matrix(
                "A·A⁻¹ ≠ I",
                "inverse-and-double-cofactors",
                &a,
            ));
        }
        let dc = double_cofactors_opt(&a, opts).unwrap();
        for i in 0..n {
            for j in 0..n {
                if dc.left[i][j] != dc.right[i][j] {
                    return Err(fail_with_matrix(
                        format!("L[{i}][{j}] ≠ R[{i}][{j}]"),
                        "inverse-and-double-cofactors",
                        &a,
                    ));
                }
            }
        }
        if inv.hermitian_adjoint() != inverse_opt(&a.hermitian_adjoint(), opts).unwrap() {
            return Err(fail_with_matrix(
                "(A⁻¹)* ≠ (A*)⁻¹",
                "inverse-and-double-cofactors",
                &a,
            ));
        }
        if inverse_opt(&inv, opts).unwrap() != a {
            return Err(fail_with_matrix(
                "inverse is not an involution",
                "inverse-and-double-cofactors",
                &a,
            ));
        }
    }
    Ok(cases)
}

fn solver_agreement(
    rng: &mut ChaCha8Rng,
    scale: Scale,
    opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let cases = scale.cases(6, 30);
    let mut g = Gen::new(rng);
    for case in 0..cases {
        let n = if case % 2 == 0 { 3 } else { 4 };
        let a = g.invertible(n, &h);
        let y = g.column(n, &h);
        let sys = System {
            a: a.clone(),
            y: y.clone(),
            side: Side::Right,
        };

        let cramer = solve_right_opt(&a, &y, opts).unwrap();
        let via_inverse = inverse_opt(&a, opts).unwrap().matmul(&y).unwrap();
        let gauss = quasi_solve(&a, &y).unwrap();
        if cramer != via_inverse || cramer != gauss {
            return Err(fail_with_system(
                "right solvers disagree",
                "solver-agreement",
                &sys,
            ));
        }
        if a.matmul(&cramer).unwrap() != y {
            return Err(fail_with_system(
                "right residual nonzero",
                "solver-agreement",
                &sys,
            ));
        }

        let yr = g.row(n, &h);
        let lsys = System {
            a: a.clone(),
            y: yr.clone(),
            side: Side::Left,
        };
        let lcramer = solve_left_opt(&a, &yr, opts).unwrap();
        let lvia_inverse = yr.matmul(&inverse_opt(&a, opts).unwrap()).unwrap();
        let lgauss = quasi_solve_left(&a, &yr).unwrap();
        if lcramer != lvia_inverse || lcramer != lgauss {
            return Err(fail_with_system(
                "left solvers disagree",
                "solver-agreement",
                &lsys,
            ));
        }
        if lcramer.matmul(&a).unwrap() != yr {
            return Err(fail_with_system(
                "left residual nonzero",
                "solver-agreement",
                &lsys,
            ));
        }

        // Hermitian special cases against the general ones.
        let herm = g.hermitian(n, &h);
        if hermitian_det_opt(&herm, opts).unwrap().is_zero() {
            continue;
        }
        let hy = g.column(n, &h);
        if solve_right_hermitian_opt(&herm, &hy, opts).unwrap()
            != solve_right_opt(&herm, &hy, opts).unwrap()
        {
            return Err(fail_with_matrix(
                "Hermitian right solver disagrees",
                "solver-agreement",
                &herm,
            ));
        }
        let hyr = g.row(n, &h);
        if solve_left_hermitian_opt(&herm, &hyr, opts).unwrap()
            != solve_left_opt(&herm, &hyr, opts).unwrap()
        {
            return Err(fail_with_matrix(
                "Hermitian left solver disagrees",
                "solver-agreement",
                &herm,
            ));
        }
    }
    Ok(cases)
}

fn rank_consistency(
    rng: &mut ChaCha8Rng,
    scale: Scale,
    opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let cases = scale.cases(8, 30);
    let mut g = Gen::new(rng);
    for _ in 0..cases {
        let a = g.matrix(3, 4, &h);
        let gram = a.hermitian_adjoint().matmul(&a).unwrap();
        let by_elimination = rank(&a).unwrap();
        let by_minors = principal_minor_rank_opt(&gram, opts).unwrap();
        if by_elimination != by_minors {
            return Err(fail_with_matrix(
                format!("rank {by_elimination} vs principal-minor rank {by_minors}"),
                "rank-consistency",
                &a,
            ));
        }
    }
    Ok(cases)
}

fn quasidet_three_way(
    rng: &mut ChaCha8Rng,
    scale: Scale,
    opts: &DetOptions,
) -> Result<usize, Failure> {
    let h = hamilton();
    let cases = scale.cases(6, 30);
    let mut g = Gen::new(rng);
    let mut checks = 0usize;
    for case in 0..cases {
        let n = 2 + case % 2;
        let a = g.invertible(n, &h);
        for p in 0..n {
            for q in 0..n {
                let direct = quasideterminant_opt(&a, p, q, opts).unwrap();
                let via_inv = quasidet_via_inverse_opt(&a, p, q, opts).unwrap();
                let via_rc = quasidet_via_rc_opt(&a, p, q, opts).unwrap();
                if let QuasiResult::Defined(v) = &direct {
                    if let QuasiResult::Defined(w) = &via_inv {
                        if v != w {
                            return Err(fail_with_matrix(
                                format!("({p},{q}): expression vs inverse-entry differ"),
                                "quasidet-three-way",
                                &a,
                            ));
                        }
                    }
                    if let QuasiPair::Defined {
                        column_form,
                        row_form,
                    } = &via_rc
                    {
                        if column_form != v || row_form != v {
                            return Err(fail_with_matrix(
                                format!("({p},{q}): determinantal forms differ"),
                                "quasidet-three-way",
                                &a,
                            ));
                        }
                    }
                }
                checks += 1;
            }
        }
    }
    // Degenerate cases: undefined on the invertible identity, defined with
    // value 1 on its diagonal.
    let id = QMatrix::identity(2, &h).unwrap();
    for (p, q) in [(0usize, 1usize), (1, 0)] {
        if quasideterminant_opt(&id, p, q, opts).unwrap().is_defined() {
            return Err(fail_with_matrix(
                "identity off-diagonal quasideterminant should be undefined",
                "quasidet-three-way",
                &id,
            ));
        }
    }
    for idx in 0..2 {
        match quasideterminant_opt(&id, idx, idx, opts).unwrap() {
            QuasiResult::Defined(v) if v.is_one() => {}
            other => {
                return Err(fail_with_matrix(
                    format!("identity diagonal quasideterminant: {other:?}"),
                    "quasidet-three-way",
                    &id,
                ))
            }
        }
    }
    Ok(checks + 4)
}

fn io_round_trip(rng: &mut ChaCha8Rng, scale: Scale, _opts: &DetOptions) -> Result<usize, Failure> {
    use ncdet_core::io::{parse_qmat, parse_qsys};
    let h = hamilton();
    let cases = scale.cases(20, 100);
    let mut g = Gen::new(rng);
    for case in 0..cases {
        let rows = 1 + case % 3;
        let cols = 1 + (case / 2) % 3;
        let m = g.matrix(rows, cols, &h);
        let text = write_qmat(&m);
        let parsed = parse_qmat(&text).map_err(|e| (e.to_string(), None))?;
        if parsed != m || write_qmat(&parsed) != text {
            return Err(fail_with_matrix(
                "matrix document round trip broke",
                "io-round-trip",
                &m,
            ));
        }
        let sys = System {
            a: g.matrix(2, 2, &h),
            y: g.column(2, &h),
            side: if case % 2 == 0 { Side::Right } else { Side::Left },
        };
        let text = write_qsys(&sys);
        let parsed = parse_qsys(&text).map_err(|e| (e.to_string(), None))?;
        if parsed != sys || write_qsys(&parsed) != text {
            return Err(fail_with_system(
                "system document round trip broke",
                "io-round-trip",
                &sys,
            ));
        }
    }
    Ok(cases * 2)
}
