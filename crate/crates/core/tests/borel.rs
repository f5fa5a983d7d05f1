use borel_core::corpus::*;
use borel_core::qh::*;
use borel_core::*;
use proptest::prelude::*;

struct Run {
    borel: BorelData,
    coring: CoringData,
    right: RightAlgebraReport,
    ell: Vec<i64>,
}

fn run(alg: &Algebra, order: &WeightPoset) -> Run {
    let sys = standard_modules(alg, order).unwrap();
    let borel = borel_data(alg, &sys, Execution::Parallel).unwrap();
    let coring = roiter_coring(&borel).unwrap();
    let ell = conde_multiplicities(alg, &sys).unwrap();
    let right = right_algebra(&coring, &sys, &ell).unwrap();
    Run { borel, coring, right, ell }
}

/// `dim End(⊕ P_i^{ℓ_i})`: each path `i -> j` contributes `ℓ_i ℓ_j`.
fn morita_dim(alg: &Algebra, ell: &[i64]) -> usize {
    alg.basis().iter().map(|p| (ell[p.source] * ell[p.target]) as usize).sum()
}

fn check_right_algebra(alg: &Algebra, r: &Run) {
    let sum: i64 = r.ell.iter().sum();
    let sq: i64 = r.ell.iter().map(|l| l * l).sum();
    let rep = &r.right;
    assert!(rep.associative && rep.contains_a && rep.projective);
    assert!(rep.induced_match(), "{:?} vs {:?}", rep.induced_simples, rep.expected_induced);
    assert_eq!(rep.dim, morita_dim(alg, &r.ell));
    assert_eq!(rep.semisimple_dim, Some(sq as usize));
    assert_eq!(rep.idempotents, Some(sum as usize));
    assert_eq!(rep.components, Some(alg.num_vertices()));
}

#[test]
fn zigzag_borel_quiver() {
    let alg = zigzag(2);
    let r = run(&alg, &WeightPoset::natural(5));
    let arrows: Vec<(usize, usize)> = (0..5)
        .flat_map(|i| (0..5).map(move |j| (i, j)))
        .filter(|&(i, j)| r.borel.ext1[i][j] > 0)
        .collect();
    assert_eq!(arrows, [(0, 1), (0, 2), (2, 3), (2, 4)]);
    assert!(arrows.iter().all(|&(i, j)| r.borel.ext1[i][j] == 1));
    r.borel.check_square_zero().unwrap();
    assert!(r.coring.report.all(), "{:?}", r.coring.report);
    assert_eq!(r.ell, [1, 1, 2, 1, 3]);
    check_right_algebra(&alg, &r);
    assert_eq!(r.right.dim, 24);
    assert_eq!(r.right.induced_simples, [1, 1, 3, 1, 4]);
}

#[test]
fn multi_arrow_borel_quiver() {
    for (m, n) in [(1usize, 1usize), (1, 2), (2, 1)] {
        let alg = multi_arrow(m, n);
        let r = run(&alg, &multi_arrow_order());
        let e = &r.borel.ext1;
        assert_eq!(e[1][2], n, "({m},{n})");
        assert_eq!(e[1][0], (n * n - 1) * m, "({m},{n})");
        let total: usize = e.iter().flatten().sum();
        assert_eq!(total, n + (n * n - 1) * m);
        r.borel.check_square_zero().unwrap();
        assert!(r.coring.report.all());
        check_right_algebra(&alg, &r);
    }
}

#[test]
fn borel_of_semisimple_is_itself() {
    let alg = semisimple(3);
    let r = run(&alg, &WeightPoset::discrete(3));
    assert!(r.borel.vbar.is_empty());
    assert_eq!(r.borel.algebra.dim(), 3);
    assert_eq!(r.right.dim, 3);
}

#[test]
fn borel_is_directed() {
    for (name, alg, order) in qh_corpus() {
        let r = run(&alg, &order);
        for g in &r.borel.vbar {
            assert!(order.lt(g.src, g.tgt) || order.lt(g.tgt, g.src), "{name}");
        }
        for a in r.borel.algebra.quiver().arrows() {
            assert!(order.lt(a.source, a.target), "{name}: {}", a.name);
        }
        r.borel.check_square_zero().unwrap();
        assert!(r.coring.report.all(), "{name}");
        check_right_algebra(&alg, &r);
    }
}

#[test]
fn non_quasi_hereditary_is_rejected() {
    let alg = truncated_polynomial(3);
    let sys = standard_modules(&alg, &WeightPoset::natural(1)).unwrap();
    assert!(borel_data(&alg, &sys, Execution::Sequential).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn every_total_order_gives_a_coring(k in 0..4usize, perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle()) {
        let alg = [linear_a(4), linear_a_rad(4, 2), linear_a_rad(4, 3), commutative_square()][k].clone();
        let order = WeightPoset::total(&perm).unwrap();
        let sys = standard_modules(&alg, &order).unwrap();
        prop_assume!(is_quasi_hereditary(&alg, &sys).quasi_hereditary);
        let r = run(&alg, &order);
        prop_assert!(r.borel.check_square_zero().is_ok());
        prop_assert!(r.coring.report.all());
        check_right_algebra(&alg, &r);
    }

    #[test]
    fn parallel_and_sequential_borel_agree(perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle()) {
        let alg = linear_a_rad(4, 2);
        let sys = standard_modules(&alg, &WeightPoset::total(&perm).unwrap()).unwrap();
        prop_assume!(is_quasi_hereditary(&alg, &sys).quasi_hereditary);
        let a = borel_data(&alg, &sys, Execution::Parallel).unwrap();
        let b = borel_data(&alg, &sys, Execution::Sequential).unwrap();
        prop_assert_eq!(a.ext1, b.ext1);
        prop_assert_eq!(a.d1, b.d1);
        prop_assert_eq!(a.algebra.dimension_table(), b.algebra.dimension_table());
    }
}
