//! The acceptance criteria, one check each, with wall-clock limits.
//! Runs without the test harness so the report is always shown.

use std::time::{Duration, Instant};

use borel_core::ainf::*;
use borel_core::corpus::*;
use borel_core::ext::{ext_table, SplitOrder, Splitting};
use borel_core::module::Module;
use borel_core::pipeline::*;
use borel_core::qh::*;
use borel_core::*;

type Check = std::result::Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn model(alg: &Algebra, arity: usize, order: SplitOrder) -> AInfinity {
    simples_model(alg, DEFAULT_TRUNCATION, arity, SplittingPolicy::Deterministic(order), Execution::Parallel)
        .unwrap()
        .1
}

fn ext1(a: &AInfinity, src: usize, tgt: usize) -> usize {
    a.block(1, src, tgt)[0]
}

fn ext_quiver() -> Check {
    let c = corpus();
    ensure(c.len() >= 10, || "corpus too small".into())?;
    for (name, alg) in c {
        let dg = dg_of(&alg, &simples(&alg).unwrap(), 4, Execution::Parallel).unwrap();
        let t = ext_table(&dg, &Splitting::new(&dg, SplitOrder::Forward));
        let n = alg.num_vertices();
        let mut rel = vec![vec![0; n]; n];
        for r in alg.relations() {
            rel[r.source().unwrap()][r.target().unwrap()] += 1;
        }
        for i in 0..n {
            for j in 0..n {
                ensure(t.get(1, i, j) == alg.quiver().arrow_count(i, j), || format!("{name} Ext1 {i}->{j}"))?;
                ensure(t.get(2, i, j) == rel[i][j], || format!("{name} Ext2 {i}->{j}"))?;
            }
        }
    }
    Ok(())
}

fn stasheff() -> Check {
    for (name, alg) in corpus() {
        for order in [SplitOrder::Forward, SplitOrder::Reverse] {
            let r = check_stasheff(&model(&alg, 6, order), 6, Execution::Parallel);
            ensure(r.passed(), || format!("{name}: nonzero residual"))?;
        }
    }
    for l in [3, 4] {
        let a = model(&truncated_polynomial(l), 6, SplitOrder::Forward);
        let x = ext1(&a, 0, 0);
        let y = a.block(2, 0, 0)[0];
        let t = vec![x, x, x];
        let old = a.m(&t).unwrap().iter().filter(|e| e.0 == y).fold(Scalar::from(0), |s, e| s + e.1);
        let b = a.with_entry(t, vec![(y, old + Scalar::from(1))]);
        ensure(!check_stasheff(&b, 6, Execution::Parallel).passed(), || format!("t^{l}: mutation missed"))?;
    }
    Ok(())
}

fn koszul_roundtrip() -> Check {
    for (name, alg) in corpus() {
        let ar = default_arity(&alg);
        for order in [SplitOrder::Forward, SplitOrder::Reverse] {
            let r = koszul_reconstruct(&model(&alg, ar, order), alg.field()).map_err(|e| format!("{name}: {e}"))?;
            ensure(r.algebra.dimension_table() == alg.dimension_table(), || format!("{name} {order:?}"))?;
        }
    }
    Ok(())
}

fn truncated_polynomials() -> Check {
    for l in [3usize, 4] {
        let alg = truncated_polynomial(l);
        let (dg, a) = simples_model(&alg, DEFAULT_TRUNCATION, l + 1, SplittingPolicy::default(), Execution::Parallel)
            .map_err(|e| e.to_string())?;
        let t = ext_table(&dg, &Splitting::new(&dg, SplitOrder::Forward));
        let end = borel_core::module::hom_space(&alg, &Module::simple(&alg, 0).unwrap(), &Module::simple(&alg, 0).unwrap())
            .unwrap()
            .len();
        ensure(end == 1 && (1..=6).all(|n| t.get(n, 0, 0) == 1), || format!("t^{l}: Ext dims"))?;
        let r = koszul_reconstruct(&a, Field::Rationals).map_err(|e| e.to_string())?;
        let s = &r.sketch;
        ensure(
            s.quiver.num_vertices() == 1
                && s.quiver.arrows().len() == 1
                && s.relations.len() == 1
                && s.relations[0].terms.len() == 1
                && s.relations[0].terms[0].1.len() == l,
            || format!("t^{l}: reconstruction shape"),
        )?;
    }
    Ok(())
}

fn quadratic_lemmas() -> Check {
    for alg in [linear_a_rad(3, 2), linear_a_rad(4, 2), commutative_square(), zigzag(2), kronecker(), multi_arrow(2, 1)] {
        let a = model(&alg, 6, SplitOrder::Forward);
        let r = quadratic_vanishing_check(&a).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("witness {:?}", r.witness))?;
    }
    for alg in [linear_a(3), linear_a(4), kronecker(), zigzag(2), multi_arrow(1, 2)] {
        let a = model(&alg, 6, SplitOrder::Forward);
        ensure((3..=6).all(|n| a.vanishes(n)), || "path algebra with higher products".into())?;
    }
    Ok(())
}

fn conde_numbers() -> Check {
    for n in 1..=5 {
        let alg = zigzag(n);
        let sys = standard_modules(&alg, &WeightPoset::natural(2 * n + 1)).unwrap();
        let l = conde_multiplicities(&alg, &sys).map_err(|e| e.to_string())?;
        let expect: Vec<i64> = (0..2 * n + 1).map(|v| if v % 2 == 0 { v as i64 / 2 + 1 } else { 1 }).collect();
        ensure(l == expect, || format!("zig-zag n={n}: {l:?}"))?;
    }
    for (m, n) in [(1usize, 1usize), (1, 2), (2, 1)] {
        let alg = multi_arrow(m, n);
        let sys = standard_modules(&alg, &multi_arrow_order()).unwrap();
        let l = conde_multiplicities(&alg, &sys).map_err(|e| e.to_string())?;
        ensure(l[0] == 1 + (n * n - 1) as i64 * m as i64, || format!("multi-arrow ({m},{n}): {l:?}"))?;
        let c = conde_criterion(&alg, &sys).map_err(|e| e.to_string())?;
        ensure(c == (n == 1), || format!("multi-arrow ({m},{n}): criterion {c}"))?;
    }
    Ok(())
}

fn dihedral() -> Check {
    for m in 3..=8 {
        let p = dihedral_bruhat(m);
        let l = conde_poset(&p);
        for x in 0..p.len() {
            let e = if p.is_minimal(x) { 1 } else { 3u64.pow(p.heights[x] as u32 - 1) };
            ensure(l[x] == e, || format!("height {m}: {} gives {}", p.names[x], l[x]))?;
        }
    }
    Ok(())
}

fn catalan() -> Check {
    for (n, c) in [(3, 5), (4, 14)] {
        let s = enumerate_qh_structures(&linear_a(n), DEFAULT_ENUMERATION_CAP, Execution::Parallel)
            .map_err(|e| e.to_string())?;
        ensure(s.count() == c, || format!("A{n}: {} structures", s.count()))?;
    }
    Ok(())
}

fn essential() -> Check {
    for (name, alg, order) in qh_corpus() {
        let sys = standard_modules(&alg, &order).unwrap();
        let e = essential_order(&alg, &sys).map_err(|e| e.to_string())?;
        ensure(e.agree(), || format!("{name}: generating sets differ"))?;
    }
    let alg = zigzag(2);
    let sys = standard_modules(&alg, &WeightPoset::natural(5)).unwrap();
    let e = essential_order(&alg, &sys).unwrap();
    ensure(e.by_hom_ext == WeightPoset::natural(5), || "zig-zag A5 essential order".into())
}

fn borel_pipeline() -> Check {
    let zz = zigzag(2);
    let mut cases = vec![("zig-zag A5", zz, WeightPoset::natural(5), vec![(0, 1, 1), (0, 2, 1), (2, 3, 1), (2, 4, 1)])];
    for (m, n) in [(1usize, 1usize), (1, 2), (2, 1)] {
        let arrows = vec![(1, 2, n), (1, 0, (n * n - 1) * m)];
        cases.push(("multi-arrow", multi_arrow(m, n), multi_arrow_order(), arrows));
    }
    for (name, alg, order, arrows) in cases {
        let sys = standard_modules(&alg, &order).unwrap();
        let b = borel_data(&alg, &sys, Execution::Parallel).map_err(|e| e.to_string())?;
        let total: usize = b.ext1.iter().flatten().sum();
        let listed: usize = arrows.iter().map(|a| a.2).sum();
        ensure(total == listed && arrows.iter().all(|&(i, j, k)| b.ext1[i][j] == k), || {
            format!("{name}: Borel arrows {:?}", b.ext1)
        })?;
        b.check_square_zero().map_err(|e| format!("{name}: {e}"))?;
        let c = roiter_coring(&b).map_err(|e| e.to_string())?;
        ensure(c.report.all(), || format!("{name}: {:?}", c.report))?;
        let ell = conde_multiplicities(&alg, &sys).unwrap();
        let r = right_algebra(&c, &sys, &ell).map_err(|e| e.to_string())?;
        let delta: Vec<usize> = sys.delta.iter().map(|d| d.dim()).collect();
        println!(
            "    {name}: dim R⊗L_i = {:?}, dim Δ_i = {:?}, dim Δ_i^R = {:?}",
            r.induced_simples, delta, r.expected_induced
        );
        ensure(r.induced_match(), || format!("{name}: R⊗L_i ≠ Δ_i^R"))?;
        ensure(r.projective && r.associative && r.contains_a, || format!("{name}: right algebra checks"))?;
    }
    Ok(())
}

fn maurer_cartan() -> Check {
    for (name, alg) in corpus() {
        let a = model(&alg, 4, SplitOrder::Forward);
        for g in a.of_degree(1) {
            let mut x = McElement::new(vec![a.basis[g].tgt, a.basis[g].src]);
            x.set(0, 1, vec![(g, Scalar::from(1))]);
            ensure(maurer_cartan_check(&a, &x).unwrap().is_zero(), || format!("{name}: size-2 obstruction"))?;
        }
    }
    let alg = zigzag(2);
    let sys = standard_modules(&alg, &WeightPoset::natural(5)).unwrap();
    let dg = dg_of(&alg, &sys.delta, DEFAULT_TRUNCATION, Execution::Parallel).unwrap();
    let a = merkulov(&dg, 4, SplittingPolicy::default()).unwrap();
    let types = delta_filtration(&alg, &sys, &Module::projective(&alg, 0).unwrap()).unwrap().factors();
    let mut x = McElement::new(types.clone());
    for k in 0..types.len() - 1 {
        x.set(k, k + 1, vec![(ext1(&a, types[k + 1], types[k]), Scalar::from(1))]);
    }
    ensure(maurer_cartan_check(&a, &x).unwrap().is_zero(), || "P1 filtration obstructed".into())?;
    let a = model(&linear_a_rad(3, 2), 4, SplitOrder::Forward);
    let mut x = McElement::new(vec![2, 1, 0]);
    x.set(0, 1, vec![(ext1(&a, 1, 2), Scalar::from(1))]);
    x.set(1, 2, vec![(ext1(&a, 0, 1), Scalar::from(1))]);
    ensure(!maurer_cartan_check(&a, &x).unwrap().is_zero(), || "relation-blocked pattern unobstructed".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check, Option<u64>); 11] = [
        ("1 Ext-quiver lemma", ext_quiver, Some(10)),
        ("2 Stasheff suite", stasheff, Some(30)),
        ("3 Koszul roundtrip", koszul_roundtrip, Some(60)),
        ("4 k[t]/t^l", truncated_polynomials, None),
        ("5 quadratic lemmas", quadratic_lemmas, None),
        ("6 Conde numbers", conde_numbers, Some(5)),
        ("7 dihedral closed form", dihedral, Some(1)),
        ("8 Catalan counts", catalan, Some(30)),
        ("9 essential order", essential, None),
        ("10 Borel pipeline", borel_pipeline, Some(60)),
        ("11 MC checker", maurer_cartan, None),
    ];
    let mut failed = Vec::new();
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let mut r = f();
        let took = start.elapsed();
        if let Some(s) = limit {
            if r.is_ok() && took > Duration::from_secs(s) {
                r = Err(format!("took {took:.2?}, limit {s} s"));
            }
        }
        match &r {
            Ok(()) => println!("PASS  {name}  ({took:.2?})"),
            Err(e) => {
                println!("FAIL  {name}  ({took:.2?}): {e}");
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed: {failed:?}");
        std::process::exit(1);
    }
}
