//! The coring `V = Aω ⊕ V̄` attached to the differential `(∂₀, ∂₁)`:
//! `ωa = aω - ∂₀(a)`, `μ(ω) = ω⊗ω`, `μ(v) = ∂₁(v) + v⊗ω + ω⊗v`, `ε(ω) = 1`.
//!
//! `V` is free as a left `A`-module on `ω e_i` and `w q` (`w` a generator of
//! `V̄`, `q` a basis path); elements are stored as `(a, b)` meaning `a · b`.
//! Tensor powers over `A` reuse that basis in every factor but the first.

use std::collections::BTreeMap;

use super::borel::BorelData;
use crate::error::Result;
use crate::field::Scalar;

/// Left basis element of `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    /// `ω e_i`.
    Omega(usize),
    /// `w q`.
    Bar(usize, usize),
}

pub type V1 = BTreeMap<(usize, Gen), Scalar>;
pub type V2 = BTreeMap<(usize, Gen, Gen), Scalar>;
pub type V3 = BTreeMap<(usize, Gen, Gen, Gen), Scalar>;

fn add<K: Ord + Clone>(m: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = m.entry(k.clone()).or_insert(Scalar::from(0));
    *e += c;
    if e.is_zero() {
        m.remove(&k);
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoringReport {
    pub coassociative: bool,
    pub counit: bool,
    pub group_like: bool,
    /// `μ` commutes with the right action of every arrow.
    pub bimodule: bool,
}

impl CoringReport {
    pub fn all(&self) -> bool {
        self.coassociative && self.counit && self.group_like && self.bimodule
    }
}

#[derive(Clone, Debug)]
pub struct CoringData {
    pub borel: BorelData,
    pub gens: Vec<Gen>,
    /// `μ` on each left generator.
    pub mu: Vec<V2>,
    pub report: CoringReport,
}

impl CoringData {
    fn alg(&self) -> &crate::algebra::Algebra {
        &self.borel.algebra
    }

    /// Vertex `i` with `e_i g = g`.
    pub fn left_vertex(&self, g: Gen) -> usize {
        match g {
            Gen::Omega(i) => i,
            Gen::Bar(w, _) => self.borel.vbar[w].tgt,
        }
    }

    /// Vertex `i` with `g e_i = g`.
    pub fn right_vertex(&self, g: Gen) -> usize {
        match g {
            Gen::Omega(i) => i,
            Gen::Bar(_, q) => self.alg().basis_path(q).source,
        }
    }

    fn index(&self, g: Gen) -> usize {
        self.gens.binary_search(&g).expect("known generator")
    }

    /// `g · c` for a basis element `c` of `A`.
    pub fn gen_times(&self, g: Gen, c: usize) -> V1 {
        let alg = self.alg();
        let mut out = V1::new();
        match g {
            Gen::Omega(i) => {
                // ω c = c ω - ∂₀(c)
                if alg.basis_path(c).target != i {
                    return out;
                }
                add(&mut out, (c, Gen::Omega(alg.basis_path(c).source)), Scalar::from(1));
                for (key, &x) in &self.borel.d0_basis(c) {
                    add(&mut out, (key[0], Gen::Bar(key[1], key[2])), -x);
                }
            }
            Gen::Bar(w, q) => {
                for &(r, x) in alg.mul_basis(q, c) {
                    add(&mut out, (alg.idempotent(self.borel.vbar[w].tgt), Gen::Bar(w, r)), x);
                }
            }
        }
        out
    }

    /// `(a, g) · c`.
    pub fn times(&self, a: usize, g: Gen, c: usize) -> V1 {
        let mut out = V1::new();
        for ((a2, g2), x) in self.gen_times(g, c) {
            for &(r, y) in self.alg().mul_basis(a, a2) {
                add(&mut out, (r, g2), x * y);
            }
        }
        out
    }

    fn lmul2(&self, a: usize, t: &V2) -> V2 {
        let mut out = V2::new();
        for (&(a2, g1, g2), &x) in t {
            for &(r, y) in self.alg().mul_basis(a, a2) {
                add(&mut out, (r, g1, g2), x * y);
            }
        }
        out
    }

    /// `t · c` on `V ⊗_A V`.
    fn rmul2(&self, t: &V2, c: usize) -> V2 {
        let mut out = V2::new();
        for (&(a, g1, g2), &x) in t {
            for ((a2, g3), y) in self.gen_times(g2, c) {
                for ((r, g4), z) in self.times(a, g1, a2) {
                    add(&mut out, (r, g4, g3), x * y * z);
                }
            }
        }
        out
    }

    /// `μ((a, g))`.
    pub fn mu_of(&self, a: usize, g: Gen) -> V2 {
        self.lmul2(a, &self.mu[self.index(g)])
    }

    fn mu_of_v1(&self, v: &V1) -> V2 {
        let mut out = V2::new();
        for (&(a, g), &x) in v {
            for (k, y) in self.mu_of(a, g) {
                add(&mut out, k, x * y);
            }
        }
        out
    }

    fn coassociative_on(&self, g: Gen) -> bool {
        let m = &self.mu[self.index(g)];
        let mut left = V3::new();
        let mut right = V3::new();
        for (&(a, g1, g2), &x) in m {
            for ((r, h1, h2), y) in self.mu_of(a, g1) {
                add(&mut left, (r, h1, h2, g2), x * y);
            }
            let inner = &self.mu[self.index(g2)];
            for (&(a2, h1, h2), &y) in inner {
                for ((r, k), z) in self.times(a, g1, a2) {
                    add(&mut right, (r, k, h1, h2), x * y * z);
                }
            }
        }
        left == right
    }

    fn counit_on(&self, g: Gen) -> bool {
        let m = &self.mu[self.index(g)];
        let alg = self.alg();
        let e = alg.idempotent(self.left_vertex(g));
        let expect: V1 = V1::from([((e, g), Scalar::from(1))]);
        let mut left = V1::new();
        let mut right = V1::new();
        for (&(a, g1, g2), &x) in m {
            if let Gen::Omega(_) = g1 {
                add(&mut left, (a, g2), x);
            }
            if let Gen::Omega(i) = g2 {
                for (k, y) in self.times(a, g1, alg.idempotent(i)) {
                    add(&mut right, k, x * y);
                }
            }
        }
        left == expect && right == expect
    }

    fn bimodule_on(&self, g: Gen, arrow_elem: usize) -> bool {
        let lhs = self.mu_of_v1(&self.gen_times(g, arrow_elem));
        let rhs = self.rmul2(&self.mu[self.index(g)], arrow_elem);
        lhs == rhs
    }
}

pub fn roiter_coring(borel: &BorelData) -> Result<CoringData> {
    borel.check_square_zero()?;
    let alg = &borel.algebra;
    let n = alg.num_vertices();
    let mut gens: Vec<Gen> = (0..n).map(Gen::Omega).collect();
    for (w, g) in borel.vbar.iter().enumerate() {
        for (q, p) in alg.basis().iter().enumerate() {
            if p.target == g.src {
                gens.push(Gen::Bar(w, q));
            }
        }
    }
    gens.sort();
    let mut data = CoringData { borel: borel.clone(), gens: gens.clone(), mu: Vec::new(), report: CoringReport::default() };
    // μ on ω e_i and on w e_src, then extended to w q by the right action.
    let mut mu_w: Vec<V2> = Vec::new();
    for (w, g) in borel.vbar.iter().enumerate() {
        let et = alg.idempotent(g.tgt);
        let es = alg.idempotent(g.src);
        let mut m = V2::new();
        for (key, &x) in &borel.d1[w] {
            add(&mut m, (key[0], Gen::Bar(key[1], key[2]), Gen::Bar(key[3], key[4])), x);
        }
        add(&mut m, (et, Gen::Bar(w, es), Gen::Omega(g.src)), Scalar::from(1));
        add(&mut m, (et, Gen::Omega(g.tgt), Gen::Bar(w, es)), Scalar::from(1));
        mu_w.push(m);
    }
    // rmul2 needs `mu` only through `times`/`gen_times`, which do not use it.
    let mut mu = Vec::with_capacity(gens.len());
    for &g in &gens {
        match g {
            Gen::Omega(i) => {
                let e = alg.idempotent(i);
                mu.push(V2::from([((e, Gen::Omega(i), Gen::Omega(i)), Scalar::from(1))]));
            }
            Gen::Bar(w, q) => mu.push(data.rmul2(&mu_w[w], q)),
        }
    }
    data.mu = mu;
    let arrows: Vec<usize> =
        (0..alg.quiver().arrows().len()).filter_map(|a| alg.arrow_index(a)).collect();
    let report = CoringReport {
        coassociative: gens.iter().all(|&g| data.coassociative_on(g)),
        counit: gens.iter().all(|&g| data.counit_on(g)),
        group_like: (0..n).all(|i| {
            let e = alg.idempotent(i);
            data.mu[data.index(Gen::Omega(i))] == V2::from([((e, Gen::Omega(i), Gen::Omega(i)), Scalar::from(1))])
        }),
        bimodule: gens.iter().all(|&g| arrows.iter().all(|&c| data.bimodule_on(g, c))),
    };
    data.report = report;
    Ok(data)
}
