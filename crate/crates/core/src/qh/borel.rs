//! Borel quiver, relations and the differential on `T_A(V̄)` read off the
//! A-infinity structure of `Ext*(Δ, Δ)`.
//!
//! Tensors in `T_A(V̄)` are stored on the basis `a_0 w_1 a_1 ... w_k a_k`
//! (keys alternate basis indices of `A` and indices of `V̄` generators),
//! written like paths: the rightmost factor comes first.

use std::collections::BTreeMap;

use super::standard::{is_quasi_hereditary, StandardSystem};
use crate::ainf::koszul::reconstruct_signed;
use crate::ainf::{AInfinity, MerkulovEngine, PresentationSketch, SplittingPolicy};
use crate::algebra::Algebra;
use crate::dg::DgEnd;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::par::Execution;
use crate::quiver::Path;
use crate::resolution::resolve_all;

pub type Tensor = BTreeMap<Vec<usize>, Scalar>;

/// A generator of `V̄`: a radical map `Δ_src -> Δ_tgt`.
#[derive(Clone, Debug)]
pub struct VbarGenerator {
    pub src: usize,
    pub tgt: usize,
    /// Index in the A-infinity basis.
    pub generator: usize,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct BorelData {
    pub algebra: Algebra,
    pub sketch: PresentationSketch,
    /// `ext1[i][j] = dim Ext¹(Δ_i, Δ_j)`, the number of arrows `i -> j`.
    pub ext1: Vec<Vec<usize>>,
    pub vbar: Vec<VbarGenerator>,
    /// `∂₀` on each arrow, in `A V̄ A`.
    pub d0: Vec<Tensor>,
    /// `∂₁` on each generator of `V̄`, in `A V̄ A V̄ A`.
    pub d1: Vec<Tensor>,
    pub ainf: AInfinity,
}

/// Sign attached to the tuple `(x_1, ..., x_n)` when an `m_n` value is
/// dualized into the word `x_1 * ... * x_n`: the shift `s^{⊗n}` contributes
/// `Σ_j (n - j)|x_j|`.
pub(crate) fn word_sign(degrees: &[i64]) -> Scalar {
    let n = degrees.len() as i64;
    let shift: i64 = degrees.iter().enumerate().map(|(j, &d)| (n - 1 - j as i64) * d).sum();
    crate::ainf::sign(shift)
}

pub fn borel_data(alg: &Algebra, sys: &StandardSystem, exec: Execution) -> Result<BorelData> {
    let v = is_quasi_hereditary(alg, sys);
    if !v.quasi_hereditary {
        return Err(Error::NotQuasiHereditary(v.diagnosis.join("; ")));
    }
    let n = alg.num_vertices();
    let truncation = 2 * n + 1;
    let res = resolve_all(alg, &sys.delta, truncation, exec);
    if res.iter().any(|r| !r.complete) {
        return Err(Error::TruncationTooLow(format!("standard modules need more than {truncation} terms")));
    }
    let dg = DgEnd::new(alg, &res)?;
    let mut eng = MerkulovEngine::new(&dg, SplittingPolicy::default())?;
    // Every Ext¹ class and radical map strictly raises the weight, so
    // nonzero composable tuples have length below `n`.
    let arity = n.max(2);
    let ainf = eng.fill(arity, |basis, t| {
        let mut zeros = 0;
        for &x in t {
            let g = &basis[x];
            match g.degree {
                0 if g.src == g.tgt => return false,
                0 => zeros += 1,
                1 => {}
                _ => return false,
            }
        }
        zeros <= 2
    });
    let sign = |t: &[usize]| word_sign(&t.iter().map(|&x| ainf.basis[x].degree).collect::<Vec<_>>());
    let rec = reconstruct_signed(&ainf, alg.field(), &sign)?;
    let algebra = rec.algebra;
    let sketch = rec.sketch;
    let mut arrow_of = vec![usize::MAX; ainf.basis.len()];
    for (a, &g) in sketch.arrow_generators.iter().enumerate() {
        arrow_of[g] = a;
    }
    let names = alg.quiver().vertices();
    let mut vbar = Vec::new();
    let mut w_of = vec![usize::MAX; ainf.basis.len()];
    for (g, gen) in ainf.basis.iter().enumerate() {
        if gen.degree == 0 && gen.src != gen.tgt {
            w_of[g] = vbar.len();
            let k = vbar.iter().filter(|w: &&VbarGenerator| w.src == gen.src && w.tgt == gen.tgt).count();
            vbar.push(VbarGenerator {
                src: gen.src,
                tgt: gen.tgt,
                generator: g,
                label: format!("v{}_{}_{}", names[gen.src], names[gen.tgt], k + 1),
            });
        }
    }
    let mut ext1 = vec![vec![0; n]; n];
    for &g in &sketch.arrow_generators {
        ext1[ainf.basis[g].src][ainf.basis[g].tgt] += 1;
    }
    let mut data = BorelData {
        algebra,
        sketch,
        ext1,
        d0: Vec::new(),
        d1: Vec::new(),
        vbar,
        ainf: ainf.clone(),
    };
    let mut d0 = vec![Tensor::new(); data.sketch.quiver.arrows().len()];
    let mut d1 = vec![Tensor::new(); data.vbar.len()];
    let mut keys: Vec<&Vec<usize>> = ainf.tables.iter().flat_map(|t| t.keys()).collect();
    keys.sort();
    for t in keys {
        let zeros = t.iter().filter(|&&x| ainf.basis[x].degree == 0).count();
        if zeros == 0 {
            continue;
        }
        let out = &ainf.tables[t.len()][t];
        if out.is_empty() {
            continue;
        }
        let word = data.word(t, &arrow_of, &w_of);
        let sg = sign(t);
        for &(g, c) in out {
            let target = if zeros == 1 { &mut d0[arrow_of[g]] } else { &mut d1[w_of[g]] };
            add_scaled(target, &word, sg * c);
        }
    }
    data.d0 = d0;
    data.d1 = d1;
    Ok(data)
}

pub(crate) fn add_scaled(acc: &mut Tensor, t: &Tensor, c: Scalar) {
    if c.is_zero() {
        return;
    }
    for (k, &x) in t {
        let e = acc.entry(k.clone()).or_insert(Scalar::from(0));
        *e += c * x;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

impl BorelData {
    pub fn field(&self) -> crate::field::Field {
        self.algebra.field()
    }

    /// Number of `V̄` factors of a key.
    pub fn degree_of(key: &[usize]) -> usize {
        key.len() / 2
    }

    fn path_of(&self, arrows_applied: &[usize], vertex: usize) -> Vec<(usize, Scalar)> {
        let q = self.algebra.quiver();
        let p = if arrows_applied.is_empty() {
            Path::trivial(vertex)
        } else {
            Path::from_arrows(q, arrows_applied).expect("composable arrows")
        };
        self.algebra.reduce_path(&p)
    }

    /// The word `x_1 * ... * x_n` of a composable tuple of Ext¹ classes and
    /// radical maps.
    fn word(&self, t: &[usize], arrow_of: &[usize], w_of: &[usize]) -> Tensor {
        let basis = &self.ainf.basis;
        // Segments of arrows (in application order) between V̄ letters.
        let mut segs: Vec<(Vec<usize>, usize)> = Vec::new();
        let mut ws = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        let mut vertex = basis[t[0]].tgt;
        for &x in t {
            if basis[x].degree == 0 {
                cur.reverse();
                segs.push((std::mem::take(&mut cur), vertex));
                ws.push(w_of[x]);
            } else {
                cur.push(arrow_of[x]);
            }
            vertex = basis[x].src;
        }
        cur.reverse();
        segs.push((cur, vertex));
        let mut out: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), Scalar::from(1))];
        for (k, (arrows, v)) in segs.iter().enumerate() {
            let elem = self.path_of(arrows, *v);
            let mut next = Vec::new();
            for (key, c) in &out {
                for &(b, x) in &elem {
                    let mut nk = key.clone();
                    if k > 0 {
                        nk.push(ws[k - 1]);
                    }
                    nk.push(b);
                    next.push((nk, *c * x));
                }
            }
            out = next;
        }
        let mut t = Tensor::new();
        for (k, c) in out {
            add_scaled(&mut t, &Tensor::from([(k, Scalar::from(1))]), c);
        }
        t
    }

    /// `x · t` for `x` in `A` (as sparse coordinates).
    pub fn lmul(&self, x: &[(usize, Scalar)], t: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (key, &c) in t {
            for &(a, xa) in x {
                for &(b, y) in self.algebra.mul_basis(a, key[0]) {
                    let mut nk = key.clone();
                    nk[0] = b;
                    add_scaled(&mut out, &Tensor::from([(nk, Scalar::from(1))]), c * xa * y);
                }
            }
        }
        out
    }

    /// `t · x`.
    pub fn rmul(&self, t: &Tensor, x: &[(usize, Scalar)]) -> Tensor {
        let mut out = Tensor::new();
        for (key, &c) in t {
            let last = key.len() - 1;
            for &(a, xa) in x {
                for &(b, y) in self.algebra.mul_basis(key[last], a) {
                    let mut nk = key.clone();
                    nk[last] = b;
                    add_scaled(&mut out, &Tensor::from([(nk, Scalar::from(1))]), c * xa * y);
                }
            }
        }
        out
    }

    /// `∂₀` of a path given by its arrows in application order.
    pub fn d0_path(&self, arrows: &[usize]) -> Tensor {
        let mut out = Tensor::new();
        let q = self.algebra.quiver();
        for k in 0..arrows.len() {
            let a = arrows[k];
            let right = self.path_of(&arrows[..k], q.arrow(a).source);
            let left = self.path_of(&arrows[k + 1..], q.arrow(a).target);
            let t = self.rmul(&self.lmul(&left, &self.d0[a]), &right);
            add_scaled(&mut out, &t, Scalar::from(1));
        }
        out
    }

    /// `∂₀` of the basis element `k` of `A`.
    pub fn d0_basis(&self, k: usize) -> Tensor {
        let p = self.algebra.basis_path(k).clone();
        self.d0_path(&p.arrows)
    }

    /// The derivation `∂` on a tensor, with the Koszul sign `(-1)^i` when
    /// passing `i` generators of `V̄`.
    pub fn d(&self, t: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (key, &c) in t {
            let k = key.len() / 2;
            for i in 0..=k {
                let sg = crate::ainf::sign(i as i64) * c;
                let inner = self.d0_basis(key[2 * i]);
                for (ik, &ic) in &inner {
                    let mut nk = key[..2 * i].to_vec();
                    nk.extend_from_slice(ik);
                    nk.extend_from_slice(&key[2 * i + 1..]);
                    add_scaled(&mut out, &Tensor::from([(nk, Scalar::from(1))]), sg * ic);
                }
            }
            for i in 1..=k {
                let sg = crate::ainf::sign(i as i64 - 1) * c;
                let left = vec![(key[2 * i - 2], Scalar::from(1))];
                let right = vec![(key[2 * i], Scalar::from(1))];
                let inner = self.rmul(&self.lmul(&left, &self.d1[key[2 * i - 1]]), &right);
                for (ik, &ic) in &inner {
                    let mut nk = key[..2 * i - 2].to_vec();
                    nk.extend_from_slice(ik);
                    nk.extend_from_slice(&key[2 * i + 1..]);
                    add_scaled(&mut out, &Tensor::from([(nk, Scalar::from(1))]), sg * ic);
                }
            }
        }
        out
    }

    /// The tensor `e_tgt w e_src` of a `V̄` generator.
    pub fn vbar_tensor(&self, w: usize) -> Tensor {
        let g = &self.vbar[w];
        let key = vec![self.algebra.idempotent(g.tgt), w, self.algebra.idempotent(g.src)];
        Tensor::from([(key, Scalar::from(1))])
    }

    /// `∂₀` kills every relation of `A`, so it is well defined on `A`.
    pub fn check_relations(&self) -> Result<()> {
        for r in self.algebra.relations() {
            let mut acc = Tensor::new();
            for (c, p) in &r.terms {
                add_scaled(&mut acc, &self.d0_path(&p.arrows), *c);
            }
            if !acc.is_empty() {
                return Err(Error::NotADifferential(format!(
                    "∂₀ does not vanish on relation {}",
                    r.display(self.algebra.quiver())
                )));
            }
        }
        Ok(())
    }

    /// `∂² = 0` on arrows, on generators of `V̄`, and on the basis of
    /// `A V̄ A` (so up to tensor degree 3).
    pub fn check_square_zero(&self) -> Result<()> {
        self.check_relations()?;
        let q = self.algebra.quiver();
        for (a, arrow) in q.arrows().iter().enumerate() {
            let t = self.d(&self.d0_path(&[a]));
            if !t.is_empty() {
                return Err(Error::NotADifferential(format!("∂² ≠ 0 on arrow {}", arrow.name)));
            }
        }
        for (w, g) in self.vbar.iter().enumerate() {
            if !self.d(&self.d1[w]).is_empty() {
                return Err(Error::NotADifferential(format!("∂² ≠ 0 on {}", g.label)));
            }
            let tgt = self.algebra.basis().iter().enumerate().filter(|(_, p)| p.source == g.tgt);
            for (x, _) in tgt {
                let src = self.algebra.basis().iter().enumerate().filter(|(_, p)| p.target == g.src);
                for (y, _) in src {
                    let t = Tensor::from([(vec![x, w, y], Scalar::from(1))]);
                    if !self.d(&self.d(&t)).is_empty() {
                        return Err(Error::NotADifferential(format!("∂² ≠ 0 on a tensor through {}", g.label)));
                    }
                }
            }
        }
        Ok(())
    }
}
