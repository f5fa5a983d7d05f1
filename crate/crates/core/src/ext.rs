//! Splittings `End^n = B ⊕ H ⊕ L` of the dg endomorphism algebra and the
//! resulting Ext tables.
//!
//! Splittings are made slice by slice, a slice being one block `(i -> j)`
//! in one cohomological degree and (when available) one internal degree.
//! `B^n` is taken as `δ(L^{n-1})`, so `h` sends the chosen boundary basis
//! exactly to the chosen `L` basis.

use std::collections::BTreeMap;

use crate::dg::{DgElem, DgEnd};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{complement_indices, is_zero_vec, span_rank, Matrix, Reducer};

/// Order in which candidate vectors are offered when choosing complements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SplitOrder {
    #[default]
    Forward,
    Reverse,
}

pub type SliceKey = (usize, usize, i64);

/// One slice of one degree.
#[derive(Clone, Debug)]
pub struct Slice {
    pub key: SliceKey,
    /// Basis indices (in this degree) spanning the slice.
    pub idx: Vec<usize>,
    /// Vectors in slice-local coordinates.
    pub b: Vec<Vec<Scalar>>,
    pub h: Vec<Vec<Scalar>>,
    pub l: Vec<Vec<Scalar>>,
    /// Inverse of the change of basis `[B | H | L]`.
    inv: Matrix,
}

/// One harmonic representative.
#[derive(Clone, Debug)]
pub struct ExtElem {
    pub degree: i64,
    pub src: usize,
    pub tgt: usize,
    pub internal: Option<i64>,
    pub slice: usize,
    pub local: usize,
}

#[derive(Clone, Debug)]
pub struct Splitting {
    window: i64,
    slices: Vec<Vec<Slice>>,
    /// Harmonic basis per degree, in slice order.
    ext: Vec<Vec<ExtElem>>,
}

fn slice_keys(dg: &DgEnd, n: i64) -> BTreeMap<SliceKey, Vec<usize>> {
    let mut m: BTreeMap<SliceKey, Vec<usize>> = BTreeMap::new();
    let ideg = dg.internal_degrees(n);
    for c in 0..dg.dim(n) {
        let (s, t) = dg.block_of(n, c);
        let g = ideg.map_or(0, |d| d[c]);
        m.entry((s, t, g)).or_default().push(c);
    }
    m
}

fn ordered<T: Clone>(v: Vec<T>, order: SplitOrder) -> Vec<T> {
    match order {
        SplitOrder::Forward => v,
        SplitOrder::Reverse => v.into_iter().rev().collect(),
    }
}

fn local_unit(f: crate::field::Field, d: usize, k: usize) -> Vec<Scalar> {
    crate::module::unit(f, d, k)
}

impl Splitting {
    pub fn new(dg: &DgEnd, order: SplitOrder) -> Self {
        let f = dg.algebra().field();
        let w = dg.window();
        let mut slices: Vec<Vec<Slice>> = Vec::new();
        // L vectors of the previous degree, in global coordinates, per key.
        let mut prev_l: BTreeMap<SliceKey, Vec<DgElem>> = BTreeMap::new();
        for n in -w..=w {
            let keys = slice_keys(dg, n);
            let delta = dg.differential(n);
            let mut this = Vec::new();
            let mut next_l = BTreeMap::new();
            for (key, idx) in keys {
                let d = idx.len();
                let to_local = |v: &DgElem| -> Vec<Scalar> { idx.iter().map(|&c| v[c]).collect() };
                // Cycles: nullspace of δ on this slice.
                let all_rows: Vec<usize> = (0..delta.rows()).collect();
                let sub = delta.submatrix(&all_rows, &idx);
                let z = sub.nullspace();
                let b: Vec<Vec<Scalar>> = prev_l
                    .get(&key)
                    .map(|ls| ls.iter().map(|l| to_local(&dg.apply_delta(n - 1, l))).collect())
                    .unwrap_or_default();
                let mut hc = ordered(z.clone(), order);
                if n == 0 && key.0 == key.1 && key.2 == 0 {
                    hc.insert(0, to_local(&identity(dg, key.0)));
                }
                let h: Vec<Vec<Scalar>> = complement_indices(f, d, &b, &hc)
                    .into_iter()
                    .map(|k| hc[k].clone())
                    .collect();
                let units: Vec<Vec<Scalar>> = ordered((0..d).map(|k| local_unit(f, d, k)).collect(), order);
                let l: Vec<Vec<Scalar>> = complement_indices(f, d, &z, &units)
                    .into_iter()
                    .map(|k| units[k].clone())
                    .collect();
                let mut cols = b.clone();
                cols.extend(h.iter().cloned());
                cols.extend(l.iter().cloned());
                let inv = Matrix::from_cols(f, d, &cols)
                    .inverse()
                    .expect("B, H, L span the slice");
                let lg: Vec<DgElem> = l
                    .iter()
                    .map(|v| {
                        let mut g = dg.zero(n);
                        for (&c, &x) in idx.iter().zip(v) {
                            g[c] = x;
                        }
                        g
                    })
                    .collect();
                next_l.insert(key, lg);
                this.push(Slice { key, idx, b, h, l, inv });
            }
            prev_l = next_l;
            slices.push(this);
        }
        let mut split = Splitting { window: w, slices, ext: Vec::new() };
        split.ext = split.collect_ext(dg);
        split
    }

    fn collect_ext(&self, dg: &DgEnd) -> Vec<Vec<ExtElem>> {
        (-self.window..=self.window)
            .map(|n| {
                let mut out = Vec::new();
                for (si, s) in self.slices[(n + self.window) as usize].iter().enumerate() {
                    for k in 0..s.h.len() {
                        out.push(ExtElem {
                            degree: n,
                            src: s.key.0,
                            tgt: s.key.1,
                            internal: dg.is_graded().then_some(s.key.2),
                            slice: si,
                            local: k,
                        });
                    }
                }
                out
            })
            .collect()
    }

    fn slot(&self, n: i64) -> Option<usize> {
        (n.abs() <= self.window).then(|| (n + self.window) as usize)
    }

    pub fn slices(&self, n: i64) -> &[Slice] {
        self.slot(n).map_or(&[], |s| &self.slices[s])
    }

    /// Harmonic basis of degree `n`.
    pub fn ext_basis(&self, n: i64) -> &[ExtElem] {
        self.slot(n).map_or(&[], |s| &self.ext[s])
    }

    /// `i`: the representative cycle of harmonic basis element `k`.
    pub fn include(&self, dg: &DgEnd, n: i64, k: usize) -> DgElem {
        let e = &self.ext_basis(n)[k];
        let s = &self.slices(n)[e.slice];
        let mut g = dg.zero(n);
        for (&c, &x) in s.idx.iter().zip(&s.h[e.local]) {
            g[c] = x;
        }
        g
    }

    /// Local coordinates of `v` restricted to slice `s`: `(B, H, L)` parts.
    fn coords(s: &Slice, v: &[Scalar]) -> Vec<Scalar> {
        let local: Vec<Scalar> = s.idx.iter().map(|&c| v[c]).collect();
        s.inv.mul_vec(&local)
    }

    /// `p`: coordinates on the harmonic basis of degree `n`.
    pub fn project(&self, n: i64, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::new();
        for s in self.slices(n) {
            let c = Self::coords(s, v);
            out.extend_from_slice(&c[s.b.len()..s.b.len() + s.h.len()]);
        }
        out
    }

    /// `h`: degree `n` to degree `n - 1`, zero on `H ⊕ L`, `δ^{-1}` on `B`.
    pub fn homotopy(&self, dg: &DgEnd, n: i64, v: &[Scalar]) -> DgElem {
        let mut out = dg.zero(n - 1);
        let prev = self.slices(n - 1);
        for s in self.slices(n) {
            if s.b.is_empty() {
                continue;
            }
            let c = Self::coords(s, v);
            let ps = prev.iter().find(|p| p.key == s.key).expect("boundaries come from L");
            for (k, &ck) in c[..s.b.len()].iter().enumerate() {
                if ck.is_zero() {
                    continue;
                }
                for (&col, &x) in ps.idx.iter().zip(&ps.l[k]) {
                    out[col] += ck * x;
                }
            }
        }
        out
    }

    /// Checks the splitting invariants on every degree: `H ⊕ B` are
    /// cycles, `δ: L -> B` is onto the chosen boundaries, and
    /// `hδ + δh = id - ip` on every basis vector.
    pub fn validate(&self, dg: &DgEnd) -> Result<()> {
        let w = self.window;
        if w != dg.window() {
            return Err(Error::SplittingInvalid("degree window mismatch".into()));
        }
        for n in -w..=w {
            for s in self.slices(n) {
                let total = s.b.len() + s.h.len() + s.l.len();
                if total != s.idx.len() {
                    return Err(Error::SplittingInvalid(format!("slice {:?} not spanned", s.key)));
                }
            }
            for c in 0..dg.dim(n) {
                let u = dg.unit(n, c);
                let hd = self.homotopy(dg, n + 1, &dg.apply_delta(n, &u));
                let dh = dg.apply_delta(n - 1, &self.homotopy(dg, n, &u));
                let p = self.project(n, &u);
                let mut ip = dg.zero(n);
                for (k, &x) in p.iter().enumerate() {
                    if !x.is_zero() {
                        crate::matrix::axpy(&mut ip, x, &self.include(dg, n, k));
                    }
                }
                for r in 0..u.len() {
                    if hd[r] + dh[r] != u[r] - ip[r] {
                        return Err(Error::SplittingInvalid(format!(
                            "hd + dh != id - ip in degree {n}"
                        )));
                    }
                }
            }
            for k in 0..self.ext_basis(n).len() {
                if !is_zero_vec(&dg.apply_delta(n, &self.include(dg, n, k))) {
                    return Err(Error::SplittingInvalid(format!("H not closed in degree {n}")));
                }
            }
        }
        Ok(())
    }
}

/// The identity chain map of block `i` in degree 0.
pub fn identity(dg: &DgEnd, i: usize) -> DgElem {
    let alg = dg.algebra();
    let mut v = dg.zero(0);
    for (c, e) in dg.basis(0).iter().enumerate() {
        if e.src_block == i && e.tgt_block == i && e.s == e.t {
            let p = alg.basis_path(e.x);
            let v_s = dg.resolutions()[i].terms[e.term].vertices[e.s];
            if p.is_trivial() && p.source == v_s {
                v[c] = alg.field().one();
            }
        }
    }
    v
}

/// Ext dimensions per degree and block, `dims[n][i][j] = dim Ext^n(M_i, M_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub dims: Vec<Vec<Vec<usize>>>,
    /// True when every reported degree is exact (not affected by truncation).
    pub complete: bool,
}

impl ExtTable {
    pub fn get(&self, n: usize, i: usize, j: usize) -> usize {
        self.dims.get(n).map_or(0, |d| d[i][j])
    }
    pub fn max_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }
}

pub fn ext_table(dg: &DgEnd, split: &Splitting) -> ExtTable {
    let b = dg.num_blocks();
    let top = if dg.complete() {
        dg.window()
    } else {
        (1..=dg.window()).take_while(|&n| dg.honest(n)).last().unwrap_or(0)
    };
    let mut dims = Vec::new();
    for n in 0..=top.max(0) {
        let mut t = vec![vec![0; b]; b];
        if n == 0 && !dg.complete() {
            for (i, row) in t.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell = ext0_rank(dg, i, j);
                }
            }
        } else {
            for e in split.ext_basis(n) {
                t[e.src][e.tgt] += 1;
            }
        }
        dims.push(t);
    }
    ExtTable { dims, complete: dg.complete() }
}

/// Rank of `Z^0_{(i,j)} -> Hom_k(P_0(M_i), M_j)`, `f ↦ ε_j f_0`: the
/// image is `Hom_A(M_i, M_j)` pulled back along the surjection `ε_i`.
fn ext0_rank(dg: &DgEnd, i: usize, j: usize) -> usize {
    let alg = dg.algebra();
    let f = alg.field();
    let keys = slice_keys(dg, 0);
    let delta = dg.differential(0);
    let rows: Vec<usize> = (0..delta.rows()).collect();
    let ri = &dg.resolutions()[i];
    let rj = &dg.resolutions()[j];
    if ri.terms.is_empty() || rj.terms.is_empty() {
        return 0;
    }
    let eps = rj.augmentation_matrix(alg);
    let mut images = Vec::new();
    for ((s, t, _), idx) in keys {
        if (s, t) != (i, j) {
            continue;
        }
        for z in delta.submatrix(&rows, &idx).nullspace() {
            let mut g = dg.zero(0);
            for (&c, x) in idx.iter().zip(z) {
                g[c] = x;
            }
            let comp = dg.component(0, &g, i, j, 0).expect("term 0 exists");
            let m = eps.mul(&comp.matrix(alg, &ri.terms[0], &rj.terms[0]));
            images.push(m.to_rows().concat());
        }
    }
    let dim = images.first().map_or(0, |v| v.len());
    span_rank(f, dim, &images)
}

/// Checks that a vector lies in the span of the given ones.
pub fn in_span(f: crate::field::Field, vs: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let mut r = Reducer::new(f, v.len());
    for x in vs {
        r.insert(x);
    }
    r.contains(v)
}
