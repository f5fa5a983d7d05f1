//! Minimal projective resolutions.
//!
//! A term is a direct sum `⊕_k P_{v_k}` with `P_v = A e_v`. Its coordinate
//! space has basis `(k, x)` with `x` a normal-form path starting at `v_k`.
//! A map `⊕_k P_{a_k} -> ⊕_l P_{b_l}` is a matrix `F` of algebra elements
//! with `F[k][l] ∈ e_{a_k} A e_{b_l}` acting by right multiplication, so
//! composition `g ∘ f` is the matrix product `F · G`.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, Elem};
use crate::field::Scalar;
use crate::matrix::{complement_indices, is_zero_vec, Matrix};
use crate::module::Module;
use crate::par::{self, Execution};

/// A direct sum of indecomposable projectives with optional internal
/// degrees (one per summand).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub vertices: Vec<usize>,
    pub degrees: Option<Vec<i64>>,
    /// Coordinate basis: (summand, algebra basis index).
    pub coords: Vec<(usize, usize)>,
}

impl Term {
    pub fn new(alg: &Algebra, vertices: Vec<usize>, degrees: Option<Vec<i64>>) -> Self {
        let mut coords = Vec::new();
        for (k, &v) in vertices.iter().enumerate() {
            for j in 0..alg.num_vertices() {
                for &x in alg.block(v, j) {
                    coords.push((k, x));
                }
            }
        }
        Term { vertices, degrees, coords }
    }

    pub fn rank(&self) -> usize {
        self.vertices.len()
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Slice key of a coordinate: target vertex and internal degree.
    fn key(&self, alg: &Algebra, c: usize) -> (usize, i64) {
        let (k, x) = self.coords[c];
        let p = alg.basis_path(x);
        let d = match &self.degrees {
            Some(g) => g[k] + p.len() as i64,
            None => 0,
        };
        (p.target, d)
    }

    fn slices(&self, alg: &Algebra) -> BTreeMap<(usize, i64), Vec<usize>> {
        let mut s: BTreeMap<(usize, i64), Vec<usize>> = BTreeMap::new();
        for c in 0..self.dim() {
            s.entry(self.key(alg, c)).or_default().push(c);
        }
        s
    }

    fn coord_index(&self, k: usize, x: usize) -> usize {
        self.coords.iter().position(|&c| c == (k, x)).expect("coordinate exists")
    }

    /// Left multiplication by a basis element on a coordinate vector.
    fn left_mul(&self, alg: &Algebra, a: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![alg.field().zero(); self.dim()];
        for (c, &val) in v.iter().enumerate() {
            if val.is_zero() {
                continue;
            }
            let (k, x) = self.coords[c];
            for &(z, coef) in alg.mul_basis(a, x) {
                out[self.coord_index(k, z)] += val * coef;
            }
        }
        out
    }
}

/// A map between terms, `entries[k][l] ∈ e_{a_k} A e_{b_l}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    pub entries: Vec<Vec<Elem>>,
}

impl ProjMap {
    /// The linear map on coordinate spaces, `target.dim() x source.dim()`.
    pub fn matrix(&self, alg: &Algebra, source: &Term, target: &Term) -> Matrix {
        let mut m = Matrix::zeros(alg.field(), target.dim(), source.dim());
        let index: BTreeMap<(usize, usize), usize> =
            target.coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        for (col, &(k, x)) in source.coords.iter().enumerate() {
            for (l, f) in self.entries[k].iter().enumerate() {
                for (y, &fy) in f.iter().enumerate() {
                    if fy.is_zero() {
                        continue;
                    }
                    for &(z, c) in alg.mul_basis(x, y) {
                        m[(index[&(l, z)], col)] += fy * c;
                    }
                }
            }
        }
        m
    }

    /// `other ∘ self` as the matrix product `self · other`.
    pub fn then(&self, alg: &Algebra, other: &ProjMap) -> ProjMap {
        let rows = self.entries.len();
        let mid = other.entries.len();
        let cols = other.entries.first().map_or(0, |r| r.len());
        let mut entries = vec![vec![alg.zero(); cols]; rows];
        for k in 0..rows {
            for t in 0..mid {
                for l in 0..cols {
                    let p = alg.mul(&self.entries[k][t], &other.entries[t][l]);
                    for (e, v) in entries[k][l].iter_mut().zip(p) {
                        *e += v;
                    }
                }
            }
        }
        ProjMap { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| is_zero_vec(e))
    }
}

/// A minimal projective resolution truncated at `max_degree`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: Module,
    pub terms: Vec<Term>,
    /// `differentials[n - 1] = d_n : terms[n] -> terms[n - 1]`.
    pub differentials: Vec<ProjMap>,
    /// Image in `M` of the generator `e_{v_k}` of each summand of term 0.
    pub augmentation: Vec<Vec<Scalar>>,
    pub max_degree: usize,
    /// True when the kernel of the last computed map vanishes.
    pub complete: bool,
}

impl Resolution {
    pub fn graded(&self) -> bool {
        self.terms.first().is_none_or(|t| t.degrees.is_some())
    }

    /// Index of the last non-zero term plus one.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `ε : P_0 -> M` on coordinates, `dim M x dim P_0` (module coordinates
    /// concatenated over vertices).
    pub fn augmentation_matrix(&self, alg: &Algebra) -> Matrix {
        let m = &self.module;
        let offs = offsets(m.dims());
        let mut out = Matrix::zeros(alg.field(), m.dim(), self.terms.first().map_or(0, |t| t.dim()));
        if let Some(t0) = self.terms.first() {
            for (col, &(k, x)) in t0.coords.iter().enumerate() {
                let p = alg.basis_path(x);
                let y = m.path_matrix(p).mul_vec(&self.augmentation[k]);
                for (r, v) in y.into_iter().enumerate() {
                    out[(offs[p.target] + r, col)] = v;
                }
            }
        }
        out
    }
}

pub fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut o = vec![0; dims.len() + 1];
    for (i, &d) in dims.iter().enumerate() {
        o[i + 1] = o[i] + d;
    }
    o
}

/// Kernel basis of `m` restricted to the slices of `source`, as full
/// coordinate vectors tagged with their slice key.
fn sliced_kernel(alg: &Algebra, source: &Term, m: &Matrix) -> Vec<((usize, i64), Vec<Scalar>)> {
    let all_rows: Vec<usize> = (0..m.rows()).collect();
    let mut out = Vec::new();
    for (key, cols) in source.slices(alg) {
        let sub = m.submatrix(&all_rows, &cols);
        for v in sub.nullspace() {
            let mut full = vec![alg.field().zero(); source.dim()];
            for (&c, x) in cols.iter().zip(v) {
                full[c] = x;
            }
            out.push((key, full));
        }
    }
    out
}

/// Picks minimal generators of the submodule spanned by `kernel`.
fn minimal_generators(
    alg: &Algebra,
    term: &Term,
    kernel: &[((usize, i64), Vec<Scalar>)],
) -> Vec<((usize, i64), Vec<Scalar>)> {
    let arrows: Vec<usize> =
        (0..alg.quiver().arrows().len()).filter_map(|a| alg.arrow_index(a)).collect();
    let mut rad: BTreeMap<(usize, i64), Vec<Vec<Scalar>>> = BTreeMap::new();
    for (_, v) in kernel {
        for &a in &arrows {
            let w = term.left_mul(alg, a, v);
            if let Some(c) = w.iter().position(|x| !x.is_zero()) {
                rad.entry(term.key(alg, c)).or_default().push(w);
            }
        }
    }
    let mut by_slice: BTreeMap<(usize, i64), Vec<Vec<Scalar>>> = BTreeMap::new();
    for (k, v) in kernel {
        by_slice.entry(*k).or_default().push(v.clone());
    }
    let mut gens = Vec::new();
    for (key, cands) in by_slice {
        let base = rad.remove(&key).unwrap_or_default();
        for i in complement_indices(alg.field(), term.dim(), &base, &cands) {
            gens.push((key, cands[i].clone()));
        }
    }
    gens
}

/// Minimal projective resolution of `m` up to `max_degree`.
pub fn minimal_resolution(alg: &Algebra, m: &Module, max_degree: usize) -> Resolution {
    let f = alg.field();
    let graded = alg.is_homogeneous() && m.dim() == 1;
    // Projective cover: complement of rad M at each vertex.
    let rad = m.radical(alg);
    let mut vertices = Vec::new();
    let mut augmentation = Vec::new();
    for v in 0..alg.num_vertices() {
        let d = m.dims()[v];
        let std: Vec<Vec<Scalar>> = (0..d).map(|k| crate::module::unit(f, d, k)).collect();
        for i in complement_indices(f, d, &rad.vectors[v], &std) {
            vertices.push(v);
            augmentation.push(std[i].clone());
        }
    }
    let degrees = graded.then(|| vec![0; vertices.len()]);
    let t0 = Term::new(alg, vertices, degrees);
    let mut res = Resolution {
        module: m.clone(),
        terms: Vec::new(),
        differentials: Vec::new(),
        augmentation,
        max_degree,
        complete: false,
    };
    if t0.rank() == 0 {
        res.complete = true;
        return res;
    }
    res.terms.push(t0);
    let mut kernel = {
        let eps = res.augmentation_matrix(alg);
        sliced_kernel(alg, &res.terms[0], &eps)
    };
    for _n in 0..max_degree {
        if kernel.is_empty() {
            res.complete = true;
            return res;
        }
        let term = res.terms.last().unwrap();
        let gens = minimal_generators(alg, term, &kernel);
        let vertices: Vec<usize> = gens.iter().map(|(k, _)| k.0).collect();
        let degrees = graded.then(|| gens.iter().map(|(k, _)| k.1).collect());
        let mut entries = Vec::new();
        for (_, g) in &gens {
            let mut row = vec![alg.zero(); term.rank()];
            for (c, &val) in g.iter().enumerate() {
                if !val.is_zero() {
                    let (k, x) = term.coords[c];
                    row[k][x] += val;
                }
            }
            entries.push(row);
        }
        let next = Term::new(alg, vertices, degrees);
        let d = ProjMap { entries };
        let mat = d.matrix(alg, &next, term);
        kernel = sliced_kernel(alg, &next, &mat);
        res.terms.push(next);
        res.differentials.push(d);
    }
    res.complete = kernel.is_empty();
    res
}

/// Resolutions of several modules, computed independently.
pub fn resolve_all(
    alg: &Algebra,
    modules: &[Module],
    max_degree: usize,
    exec: Execution,
) -> Vec<Resolution> {
    par::map(exec, modules, |m| minimal_resolution(alg, m, max_degree))
}
