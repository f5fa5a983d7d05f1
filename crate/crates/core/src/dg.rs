//! The dg endomorphism algebra `End_A(P*)` of a family of resolutions.
//!
//! A map of degree `n` sends term `k` of one resolution to term `k - n` of
//! another. The basis of each degree consists of elementary maps: a single
//! normal-form path `x` placed between one summand of the source term and
//! one summand of the target term. Composition needs no signs; the
//! differential is `δ(f) = d∘f - (-1)^{|f|} f∘d`.

use std::collections::HashMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::resolution::{ProjMap, Resolution};

/// Elementary map from summand `s` of term `term` of resolution
/// `src_block` to summand `t` of term `term - degree` of resolution
/// `tgt_block`, given by right multiplication with basis path `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemMap {
    pub src_block: usize,
    pub tgt_block: usize,
    pub term: usize,
    pub s: usize,
    pub t: usize,
    pub x: usize,
}

#[derive(Clone, Debug)]
pub struct DgEnd {
    alg: Algebra,
    resolutions: Vec<Resolution>,
    window: i64,
    // basis[(n + window)] lists the elementary maps of degree n.
    basis: Vec<Vec<ElemMap>>,
    lookup: Vec<HashMap<ElemMap, usize>>,
    // by_source[(n + window)][(src_block, term, s)] = indices.
    by_source: Vec<HashMap<(usize, usize, usize), Vec<usize>>>,
    internal: Option<Vec<Vec<i64>>>,
    diff: Vec<Matrix>,
    d_elem: Vec<Scalar>,
}

/// A homogeneous element: degree plus coordinates on that degree's basis.
pub type DgElem = Vec<Scalar>;

impl DgEnd {
    pub fn new(alg: &Algebra, resolutions: &[Resolution]) -> Result<Self> {
        for r in resolutions {
            r.module.check_shape(alg)?;
        }
        let window = resolutions.iter().map(|r| r.terms.len() as i64 - 1).max().unwrap_or(0).max(0);
        let graded = !resolutions.is_empty() && resolutions.iter().all(|r| r.graded());
        let mut dg = DgEnd {
            alg: alg.clone(),
            resolutions: resolutions.to_vec(),
            window,
            basis: Vec::new(),
            lookup: Vec::new(),
            by_source: Vec::new(),
            internal: None,
            diff: Vec::new(),
            d_elem: Vec::new(),
        };
        let mut internal = Vec::new();
        for n in -window..=window {
            let mut b = Vec::new();
            let mut ideg = Vec::new();
            for (i, ri) in resolutions.iter().enumerate() {
                for (j, rj) in resolutions.iter().enumerate() {
                    for (k, tk) in ri.terms.iter().enumerate() {
                        let tgt = k as i64 - n;
                        if tgt < 0 || tgt >= rj.terms.len() as i64 {
                            continue;
                        }
                        let tt = &rj.terms[tgt as usize];
                        for (s, &a) in tk.vertices.iter().enumerate() {
                            for (t, &bv) in tt.vertices.iter().enumerate() {
                                for &x in alg.block(bv, a) {
                                    b.push(ElemMap { src_block: i, tgt_block: j, term: k, s, t, x });
                                    if graded {
                                        let gs = tk.degrees.as_ref().unwrap()[s];
                                        let gt = tt.degrees.as_ref().unwrap()[t];
                                        ideg.push(gt + alg.basis_path(x).len() as i64 - gs);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            let lookup = b.iter().enumerate().map(|(i, e)| (*e, i)).collect();
            let mut by_source: HashMap<(usize, usize, usize), Vec<usize>> = HashMap::new();
            for (idx, e) in b.iter().enumerate() {
                by_source.entry((e.src_block, e.term, e.s)).or_default().push(idx);
            }
            dg.basis.push(b);
            dg.lookup.push(lookup);
            dg.by_source.push(by_source);
            internal.push(ideg);
        }
        if graded {
            dg.internal = Some(internal);
        }
        dg.d_elem = dg.resolution_differential();
        let diff = (-window..=window)
            .map(|n| {
                let cols: Vec<Vec<Scalar>> =
                    (0..dg.dim(n)).map(|c| dg.delta(n, &dg.unit(n, c))).collect();
                Matrix::from_cols(alg.field(), dg.dim(n + 1), &cols)
            })
            .collect();
        dg.diff = diff;
        Ok(dg)
    }

    fn slot(&self, n: i64) -> Option<usize> {
        (n.abs() <= self.window).then(|| (n + self.window) as usize)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }
    pub fn resolutions(&self) -> &[Resolution] {
        &self.resolutions
    }
    pub fn num_blocks(&self) -> usize {
        self.resolutions.len()
    }
    pub fn window(&self) -> i64 {
        self.window
    }

    /// Whether every resolution terminated, so that cohomology is `Ext` in
    /// every degree.
    pub fn complete(&self) -> bool {
        self.resolutions.iter().all(|r| r.complete)
    }

    /// Degrees whose cohomology equals `Ext` (for truncated resolutions
    /// only `1..N-1`, where `N` is the truncation degree).
    pub fn honest(&self, n: i64) -> bool {
        if self.complete() {
            return true;
        }
        let trunc = self
            .resolutions
            .iter()
            .filter(|r| !r.complete)
            .map(|r| r.max_degree as i64)
            .min()
            .unwrap_or(0);
        n >= 1 && n < trunc
    }

    pub fn dim(&self, n: i64) -> usize {
        self.slot(n).map_or(0, |s| self.basis[s].len())
    }

    pub fn basis(&self, n: i64) -> &[ElemMap] {
        self.slot(n).map_or(&[], |s| &self.basis[s])
    }

    pub fn internal_degrees(&self, n: i64) -> Option<&[i64]> {
        let s = self.slot(n)?;
        self.internal.as_ref().map(|v| v[s].as_slice())
    }

    pub fn is_graded(&self) -> bool {
        self.internal.is_some()
    }

    pub fn zero(&self, n: i64) -> DgElem {
        vec![self.alg.field().zero(); self.dim(n)]
    }

    pub fn unit(&self, n: i64, c: usize) -> DgElem {
        let mut v = self.zero(n);
        v[c] = self.alg.field().one();
        v
    }

    /// Block `(src, tgt)` of a basis element.
    pub fn block_of(&self, n: i64, c: usize) -> (usize, usize) {
        let e = self.basis(n)[c];
        (e.src_block, e.tgt_block)
    }

    /// The differential matrix `End^n -> End^{n+1}`.
    pub fn differential(&self, n: i64) -> Matrix {
        match self.slot(n) {
            Some(s) => self.diff[s].clone(),
            None => Matrix::zeros(self.alg.field(), self.dim(n + 1), 0),
        }
    }

    /// `a ∘ b` (first `b`).
    pub fn compose(&self, na: i64, a: &[Scalar], nb: i64, b: &[Scalar]) -> DgElem {
        let n = na + nb;
        let mut out = self.zero(n);
        let (Some(sa), Some(sb), Some(so)) = (self.slot(na), self.slot(nb), self.slot(n)) else {
            return out;
        };
        for (ib, &cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            let eb = self.basis[sb][ib];
            let mid_term = eb.term as i64 - nb;
            let key = (eb.tgt_block, mid_term as usize, eb.t);
            let Some(cands) = self.by_source[sa].get(&key) else { continue };
            for &ia in cands {
                let ca = a[ia];
                if ca.is_zero() {
                    continue;
                }
                let ea = self.basis[sa][ia];
                for &(z, c) in self.alg.mul_basis(eb.x, ea.x) {
                    let e = ElemMap {
                        src_block: eb.src_block,
                        tgt_block: ea.tgt_block,
                        term: eb.term,
                        s: eb.s,
                        t: ea.t,
                        x: z,
                    };
                    out[self.lookup[so][&e]] += ca * cb * c;
                }
            }
        }
        out
    }

    /// The resolution differentials as one element of degree 1.
    fn resolution_differential(&self) -> DgElem {
        let mut v = self.zero(1);
        let Some(s1) = self.slot(1) else { return v };
        for (i, r) in self.resolutions.iter().enumerate() {
            for (n, d) in r.differentials.iter().enumerate() {
                let k = n + 1;
                for (s, row) in d.entries.iter().enumerate() {
                    for (t, elem) in row.iter().enumerate() {
                        for (x, &c) in elem.iter().enumerate() {
                            if !c.is_zero() {
                                let e = ElemMap { src_block: i, tgt_block: i, term: k, s, t, x };
                                v[self.lookup[s1][&e]] += c;
                            }
                        }
                    }
                }
            }
        }
        v
    }

    /// `δ(f) = d∘f - (-1)^n f∘d` for `f` of degree `n`.
    pub fn delta(&self, n: i64, f: &[Scalar]) -> DgElem {
        let df = self.compose(1, &self.d_elem, n, f);
        let fd = self.compose(n, f, 1, &self.d_elem);
        let sign = if n.rem_euclid(2) == 0 { -1 } else { 1 };
        let s = Scalar::from(sign);
        df.iter().zip(&fd).map(|(&a, &b)| a + s * b).collect()
    }

    /// Apply the stored differential matrix.
    pub fn apply_delta(&self, n: i64, f: &[Scalar]) -> DgElem {
        match self.slot(n) {
            Some(s) => self.diff[s].mul_vec(f),
            None => self.zero(n + 1),
        }
    }

    /// Component of `f` (degree `n`, block `src -> tgt`) on source term `k`,
    /// as a map of projective sums.
    pub fn component(&self, n: i64, f: &[Scalar], src: usize, tgt: usize, k: usize) -> Option<ProjMap> {
        let tgt_term = k as i64 - n;
        let ri = &self.resolutions[src];
        let rj = &self.resolutions[tgt];
        if k >= ri.terms.len() || tgt_term < 0 || tgt_term as usize >= rj.terms.len() {
            return None;
        }
        let rows = ri.terms[k].rank();
        let cols = rj.terms[tgt_term as usize].rank();
        let mut entries = vec![vec![self.alg.zero(); cols]; rows];
        for (c, e) in self.basis(n).iter().enumerate() {
            if e.src_block == src && e.tgt_block == tgt && e.term == k && !f[c].is_zero() {
                entries[e.s][e.t][e.x] += f[c];
            }
        }
        Some(ProjMap { entries })
    }
}

/// Checks `δ² = 0` on every basis element.
pub fn check_delta_squared(dg: &DgEnd) -> Result<()> {
    for n in -dg.window()..=dg.window() {
        let prod = dg.differential(n + 1).mul(&dg.differential(n));
        if !prod.is_zero() {
            return Err(Error::NotADifferential(format!("δ² ≠ 0 in degree {n}")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Presentation;
    use crate::field::Field;
    use crate::module::Module;
    use crate::resolution::minimal_resolution;

    #[test]
    fn truncated_polynomial_component_dimensions() {
        let a = Presentation::new(Field::Rationals, 1)
            .arrow("t", 1, 1)
            .relation(&[(1, "t*t*t")])
            .build()
            .unwrap();
        let r = minimal_resolution(&a, &Module::simple(&a, 0).unwrap(), 6);
        let dg = DgEnd::new(&a, &[r]).unwrap();
        for n in -6..=6i64 {
            assert_eq!(dg.dim(n), 3 * (7 - n.unsigned_abs() as usize));
        }
        check_delta_squared(&dg).unwrap();
    }

    #[test]
    fn delta_matrix_matches_direct_formula() {
        let a = Presentation::new(Field::Rationals, 3)
            .arrow("a", 1, 2)
            .arrow("b", 2, 3)
            .build()
            .unwrap();
        let rs: Vec<_> =
            (0..3).map(|i| minimal_resolution(&a, &Module::simple(&a, i).unwrap(), 4)).collect();
        let dg = DgEnd::new(&a, &rs).unwrap();
        for n in -dg.window()..=dg.window() {
            for c in 0..dg.dim(n) {
                let u = dg.unit(n, c);
                assert_eq!(dg.apply_delta(n, &u), dg.delta(n, &u));
            }
        }
    }
}
