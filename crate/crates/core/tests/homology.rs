use borel_core::corpus::*;
use borel_core::ext::{ext_table, ExtTable, SplitOrder, Splitting};
use borel_core::module::{hom_space, Module};
use borel_core::pipeline::{dg_of, simples, DEFAULT_TRUNCATION};
use borel_core::*;
use proptest::prelude::*;

fn simples_ext(alg: &Algebra, truncation: usize, order: SplitOrder) -> ExtTable {
    let dg = dg_of(alg, &simples(alg).unwrap(), truncation, Execution::Parallel).unwrap();
    let split = Splitting::new(&dg, order);
    ext_table(&dg, &split)
}

/// Relations `i -> j` of the presentation, after checking that none of them
/// can be dropped without changing the algebra.
fn minimal_relation_counts(alg: &Algebra) -> Vec<Vec<usize>> {
    let n = alg.num_vertices();
    let rels = alg.relations();
    for k in 0..rels.len() {
        let rest: Vec<Relation> = rels.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, r)| r.clone()).collect();
        let smaller = Algebra::build(alg.quiver().clone(), rest, alg.field(), 16);
        assert!(smaller.map_or(true, |b| b.dim() > alg.dim()), "relation {k} is redundant");
    }
    let mut c = vec![vec![0; n]; n];
    for r in rels {
        c[r.source().unwrap()][r.target().unwrap()] += 1;
    }
    c
}

#[test]
fn ext_quiver_lemma_on_corpus() {
    for (name, alg) in corpus() {
        let t = simples_ext(&alg, 4, SplitOrder::Forward);
        assert!(t.complete || t.max_degree() >= 2, "{name}");
        let rel = minimal_relation_counts(&alg);
        for i in 0..alg.num_vertices() {
            for j in 0..alg.num_vertices() {
                assert_eq!(t.get(1, i, j), alg.quiver().arrow_count(i, j), "{name} Ext1 {i}->{j}");
                assert_eq!(t.get(2, i, j), rel[i][j], "{name} Ext2 {i}->{j}");
            }
        }
    }
}

#[test]
fn linear_a3_ext2_at_corner() {
    let t = simples_ext(&linear_a_rad(3, 2), 4, SplitOrder::Forward);
    assert_eq!(t.get(2, 0, 2), 1);
    let total: usize = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| t.get(2, i, j)).sum();
    assert_eq!(total, 1);
    assert_eq!(t.get(3, 0, 2), 0);
}

#[test]
fn truncated_polynomial_ext_is_one_dimensional() {
    for l in [3, 4] {
        let alg = truncated_polynomial(l);
        let s = Module::simple(&alg, 0).unwrap();
        assert_eq!(hom_space(&alg, &s, &s).unwrap().len(), 1);
        let t = simples_ext(&alg, DEFAULT_TRUNCATION, SplitOrder::Forward);
        assert!(t.max_degree() >= 6);
        for n in 1..=6 {
            assert_eq!(t.get(n, 0, 0), 1, "t^{l} Ext^{n}");
        }
    }
}

#[test]
fn semisimple_has_no_higher_ext() {
    let t = simples_ext(&semisimple(3), 4, SplitOrder::Forward);
    for n in 1..=t.max_degree() {
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t.get(n, i, j), 0);
            }
        }
    }
}

#[test]
fn hereditary_algebras_have_no_ext2() {
    for alg in [linear_a(4), kronecker(), multi_arrow(2, 3), zigzag(2)] {
        let t = simples_ext(&alg, 4, SplitOrder::Forward);
        let n = alg.num_vertices();
        assert!((0..n).all(|i| (0..n).all(|j| t.get(2, i, j) == 0)));
    }
}

#[test]
fn prime_field_gives_same_table() {
    let q = simples_ext(&biserial(), 4, SplitOrder::Forward);
    let text = "field F7\nvertex 1 2 3 4 5\narrow alpha : 1 -> 2\narrow beta : 2 -> 4\narrow gamma : 2 -> 3\narrow delta : 3 -> 4\narrow eps : 4 -> 5\nrelation beta*alpha - delta*gamma*alpha\nrelation eps*beta\n";
    let alg = borel_core::parse::parse_algebra(text).unwrap().algebra;
    let p = simples_ext(&alg, 4, SplitOrder::Forward);
    assert_eq!(q.dims, p.dims);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn splitting_satisfies_homotopy_identity(k in 0..corpus().len(), reverse in any::<bool>()) {
        let alg = &corpus()[k].1;
        let dg = dg_of(alg, &simples(alg).unwrap(), 4, Execution::Sequential).unwrap();
        let order = if reverse { SplitOrder::Reverse } else { SplitOrder::Forward };
        prop_assert!(Splitting::new(&dg, order).validate(&dg).is_ok());
    }

    #[test]
    fn ext_table_independent_of_splitting(k in 0..corpus().len()) {
        let alg = &corpus()[k].1;
        prop_assert_eq!(
            simples_ext(alg, 4, SplitOrder::Forward),
            simples_ext(alg, 4, SplitOrder::Reverse)
        );
    }

    #[test]
    fn parallel_and_sequential_agree(k in 0..corpus().len()) {
        let alg = &corpus()[k].1;
        let a = dg_of(alg, &simples(alg).unwrap(), 3, Execution::Parallel).unwrap();
        let b = dg_of(alg, &simples(alg).unwrap(), 3, Execution::Sequential).unwrap();
        for n in -a.window()..=a.window() {
            prop_assert_eq!(a.dim(n), b.dim(n));
        }
        prop_assert_eq!(
            ext_table(&a, &Splitting::new(&a, SplitOrder::Forward)),
            ext_table(&b, &Splitting::new(&b, SplitOrder::Forward))
        );
    }
}
