//! Finite-dimensional left modules given as quiver representations.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{complement_indices, is_zero_vec, Matrix, Reducer};
use crate::quiver::Path;

/// A representation: a space of dimension `dims[v]` per vertex and a
/// matrix `dims[target] x dims[source]` per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    field: Field,
    dims: Vec<usize>,
    action: Vec<Matrix>,
}

/// A homomorphism given by one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub maps: Vec<Matrix>,
}

/// A subspace of each vertex space of a module, one list of vectors per
/// vertex (linearly independent within each vertex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub vectors: Vec<Vec<Vec<Scalar>>>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.vectors.iter().map(|v| v.len()).sum()
    }
    pub fn dims(&self) -> Vec<usize> {
        self.vectors.iter().map(|v| v.len()).collect()
    }
}

impl Module {
    pub fn new(alg: &Algebra, dims: Vec<usize>, action: Vec<Matrix>) -> Result<Self> {
        let m = Module { field: alg.field(), dims, action };
        m.check_shape(alg)?;
        Ok(m)
    }

    pub fn zero(alg: &Algebra) -> Self {
        let n = alg.num_vertices();
        Self::from_parts(
            alg.field(),
            vec![0; n],
            alg.quiver().arrows().iter().map(|_| Matrix::zeros(alg.field(), 0, 0)).collect(),
        )
    }

    fn from_parts(field: Field, dims: Vec<usize>, action: Vec<Matrix>) -> Self {
        Module { field, dims, action }
    }

    pub fn check_shape(&self, alg: &Algebra) -> Result<()> {
        let q = alg.quiver();
        if self.field != alg.field()
            || self.dims.len() != q.num_vertices()
            || self.action.len() != q.arrows().len()
        {
            return Err(Error::MismatchedAlgebra);
        }
        for (m, a) in self.action.iter().zip(q.arrows()) {
            if m.rows() != self.dims[a.target] || m.cols() != self.dims[a.source] {
                return Err(Error::MismatchedAlgebra);
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn arrow_matrix(&self, a: usize) -> &Matrix {
        &self.action[a]
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn simple(alg: &Algebra, i: usize) -> Result<Self> {
        check_vertex(alg, i)?;
        let mut dims = vec![0; alg.num_vertices()];
        dims[i] = 1;
        Ok(Self::with_zero_action(alg, dims))
    }

    fn with_zero_action(alg: &Algebra, dims: Vec<usize>) -> Self {
        let action = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(alg.field(), dims[a.target], dims[a.source]))
            .collect();
        Module { field: alg.field(), dims, action }
    }

    /// `P_i = A e_i`, with basis the normal-form paths starting at `i`.
    pub fn projective(alg: &Algebra, i: usize) -> Result<Self> {
        check_vertex(alg, i)?;
        let n = alg.num_vertices();
        let dims: Vec<usize> = (0..n).map(|j| alg.block(i, j).len()).collect();
        let mut action = Vec::new();
        for (id, a) in alg.quiver().arrows().iter().enumerate() {
            let mut m = Matrix::zeros(alg.field(), dims[a.target], dims[a.source]);
            let x = alg.arrow_index(id).expect("arrows are basis elements");
            for (col, &y) in alg.block(i, a.source).iter().enumerate() {
                for &(z, c) in alg.mul_basis(x, y) {
                    m[(alg.position(z), col)] += c;
                }
            }
            action.push(m);
        }
        Ok(Module { field: alg.field(), dims, action })
    }

    /// `I_i`: the dual of the projective `P_i` over the opposite algebra.
    pub fn injective(alg: &Algebra, i: usize) -> Result<Self> {
        check_vertex(alg, i)?;
        Ok(Module::projective(&alg.opposite(), i)?.dualize())
    }

    /// The vector-space dual, a module over the opposite algebra.
    pub fn dualize(&self) -> Module {
        Module {
            field: self.field,
            dims: self.dims.clone(),
            action: self.action.iter().map(|m| m.transpose()).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.block_diag(b)).collect();
        Module { field: self.field, dims, action }
    }

    /// Matrix of a path, `dims[target] x dims[source]`.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field, self.dims[p.source]);
        for &a in &p.arrows {
            m = self.action[a].mul(&m);
        }
        m
    }

    /// Matrix of a basis element of the algebra.
    pub fn basis_matrix(&self, alg: &Algebra, k: usize) -> Matrix {
        self.path_matrix(alg.basis_path(k))
    }

    /// Whether every relation acts by zero.
    pub fn satisfies_relations(&self, alg: &Algebra) -> bool {
        alg.relations().iter().all(|r| {
            let (s, t) = (r.source().unwrap(), r.target().unwrap());
            let mut acc = Matrix::zeros(self.field, self.dims[t], self.dims[s]);
            for (c, p) in &r.terms {
                acc = acc.add(&self.path_matrix(p).scale(*c));
            }
            acc.is_zero()
        }) && (alg.nilpotency() == 0
            || alg
                .quiver()
                .paths_of_length(alg.nilpotency())
                .iter()
                .all(|p| self.path_matrix(p).is_zero()))
    }

    /// Action of an algebra element on a vector of `M_v`, landing in the
    /// whole module (one vector per vertex).
    pub fn act(&self, alg: &Algebra, elem: &[Scalar], v: usize, x: &[Scalar]) -> Vec<Vec<Scalar>> {
        let mut out: Vec<Vec<Scalar>> = self.dims.iter().map(|&d| vec![self.field.zero(); d]).collect();
        for (k, c) in elem.iter().enumerate() {
            let p = alg.basis_path(k);
            if c.is_zero() || p.source != v {
                continue;
            }
            let y = self.path_matrix(p).mul_vec(x);
            crate::matrix::axpy(&mut out[p.target], *c, &y);
        }
        out
    }

    /// Submodule generated by the given vectors.
    pub fn generate(&self, alg: &Algebra, gens: &Subspace) -> Subspace {
        let n = self.dims.len();
        let mut reducers: Vec<Reducer> = self.dims.iter().map(|&d| Reducer::new(self.field, d)).collect();
        let mut vectors: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); n];
        let mut queue: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for (v, vs) in gens.vectors.iter().enumerate() {
            for x in vs {
                queue.push((v, x.clone()));
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let (v, x) = queue[head].clone();
            head += 1;
            if !reducers[v].insert(&x) {
                continue;
            }
            vectors[v].push(x.clone());
            for (id, a) in alg.quiver().arrows().iter().enumerate() {
                if a.source == v {
                    let y = self.action[id].mul_vec(&x);
                    if !is_zero_vec(&y) {
                        queue.push((a.target, y));
                    }
                }
            }
        }
        Subspace { vectors }
    }

    pub fn radical(&self, alg: &Algebra) -> Subspace {
        let n = self.dims.len();
        let mut vectors = vec![Vec::new(); n];
        for (id, a) in alg.quiver().arrows().iter().enumerate() {
            let m = &self.action[id];
            for c in 0..m.cols() {
                vectors[a.target].push(m.col(c));
            }
        }
        let gens = Subspace { vectors };
        // Images of arrows already form a submodule; `generate` only prunes.
        self.generate(alg, &gens)
    }

    pub fn full(&self) -> Subspace {
        let vectors = self
            .dims
            .iter()
            .map(|&d| (0..d).map(|k| unit(self.field, d, k)).collect())
            .collect();
        Subspace { vectors }
    }

    /// The submodule as a module, with its inclusion.
    pub fn submodule(&self, alg: &Algebra, sub: &Subspace) -> (Module, ModuleMap) {
        let dims = sub.dims();
        let reducers: Vec<Reducer> = sub
            .vectors
            .iter()
            .zip(&self.dims)
            .map(|(vs, &d)| {
                let mut r = Reducer::new(self.field, d);
                for x in vs {
                    r.insert(x);
                }
                r
            })
            .collect();
        let mut action = Vec::new();
        for (id, a) in alg.quiver().arrows().iter().enumerate() {
            let mut m = Matrix::zeros(self.field, dims[a.target], dims[a.source]);
            for (col, x) in sub.vectors[a.source].iter().enumerate() {
                let y = self.action[id].mul_vec(x);
                let c = reducers[a.target].coords(&y).expect("subspace is a submodule");
                for (row, v) in c.into_iter().enumerate() {
                    m[(row, col)] = v;
                }
            }
            action.push(m);
        }
        let incl = sub
            .vectors
            .iter()
            .zip(&self.dims)
            .map(|(vs, &d)| Matrix::from_cols(self.field, d, vs))
            .collect();
        (Module { field: self.field, dims, action }, ModuleMap { maps: incl })
    }

    /// `M / sub`, with the projection. The quotient basis at each vertex is
    /// the image of the standard basis vectors that complement `sub`.
    pub fn quotient(&self, alg: &Algebra, sub: &Subspace) -> (Module, ModuleMap) {
        let n = self.dims.len();
        let mut reducers = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(n);
        let mut qdims = Vec::with_capacity(n);
        for v in 0..n {
            let d = self.dims[v];
            let std: Vec<Vec<Scalar>> = (0..d).map(|k| unit(self.field, d, k)).collect();
            let comp = complement_indices(self.field, d, &sub.vectors[v], &std);
            let mut r = Reducer::new(self.field, d);
            for x in &sub.vectors[v] {
                r.insert(x);
            }
            for &k in &comp {
                r.insert(&std[k]);
            }
            offsets.push(sub.vectors[v].len());
            qdims.push(comp.len());
            reducers.push(r);
        }
        // Quotient coordinates of a vector of M_v.
        let project = |v: usize, x: &[Scalar]| -> Vec<Scalar> {
            let c = reducers[v].coords(x).expect("full rank");
            c[offsets[v]..].to_vec()
        };
        let proj: Vec<Matrix> = (0..n)
            .map(|v| {
                let cols: Vec<Vec<Scalar>> =
                    (0..self.dims[v]).map(|k| project(v, &unit(self.field, self.dims[v], k))).collect();
                Matrix::from_cols(self.field, qdims[v], &cols)
            })
            .collect();
        let mut action = Vec::new();
        for (id, a) in alg.quiver().arrows().iter().enumerate() {
            // Lift quotient basis vectors to M (they are standard vectors
            // picked by the complement), act, and project.
            let lifts = quotient_lifts(&proj[a.source]);
            let cols: Vec<Vec<Scalar>> = lifts
                .iter()
                .map(|x| project(a.target, &self.action[id].mul_vec(x)))
                .collect();
            action.push(Matrix::from_cols(self.field, qdims[a.target], &cols));
        }
        (Module { field: self.field, dims: qdims, action }, ModuleMap { maps: proj })
    }

    pub fn top(&self, alg: &Algebra) -> (Module, ModuleMap) {
        self.quotient(alg, &self.radical(alg))
    }

    /// `[M : L_i]` for every vertex (the dimension vector, as the algebra is
    /// basic and split).
    pub fn composition_factors(&self) -> Vec<usize> {
        self.dims.clone()
    }
}

/// A right inverse of a surjection given by a matrix whose columns include
/// the unit vectors of the target (as produced by [`Module::quotient`]).
fn quotient_lifts(proj: &Matrix) -> Vec<Vec<Scalar>> {
    let f = proj.field();
    (0..proj.rows())
        .map(|r| {
            let mut target = vec![f.zero(); proj.rows()];
            target[r] = f.one();
            let c = (0..proj.cols())
                .find(|&c| proj.col(c) == target)
                .expect("quotient basis comes from standard vectors");
            unit(f, proj.cols(), c)
        })
        .collect()
}

pub fn unit(field: Field, d: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); d];
    v[k] = field.one();
    v
}

fn check_vertex(alg: &Algebra, i: usize) -> Result<()> {
    if i >= alg.num_vertices() {
        return Err(Error::UnknownVertex(i.to_string()));
    }
    Ok(())
}

impl ModuleMap {
    pub fn zero(field: Field, source: &Module, target: &Module) -> Self {
        ModuleMap {
            maps: source
                .dims
                .iter()
                .zip(&target.dims)
                .map(|(&s, &t)| Matrix::zeros(field, t, s))
                .collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: Scalar) -> ModuleMap {
        ModuleMap { maps: self.maps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_homomorphism(&self, alg: &Algebra, m: &Module, n: &Module) -> bool {
        alg.quiver().arrows().iter().enumerate().all(|(id, a)| {
            self.maps[a.target].mul(&m.action[id]) == n.action[id].mul(&self.maps[a.source])
        })
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(|m| m.rank()).sum()
    }

    pub fn kernel(&self) -> Subspace {
        Subspace { vectors: self.maps.iter().map(|m| m.nullspace()).collect() }
    }

    pub fn image(&self) -> Subspace {
        Subspace {
            vectors: self
                .maps
                .iter()
                .map(|m| {
                    let cols: Vec<Vec<Scalar>> = (0..m.cols()).map(|c| m.col(c)).collect();
                    let idx = complement_indices(m.field(), m.rows(), &[], &cols);
                    idx.into_iter().map(|c| cols[c].clone()).collect()
                })
                .collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }
}

/// A basis of `Hom_A(M, N)`: the solution space of
/// `f_t M_α = N_α f_s` for every arrow `α: s -> t`.
pub fn hom_space(alg: &Algebra, m: &Module, n: &Module) -> Result<Vec<ModuleMap>> {
    m.check_shape(alg)?;
    n.check_shape(alg)?;
    let nv = alg.num_vertices();
    let f = alg.field();
    // Unknown (v, r, c) = entry (r, c) of f_v.
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[nv];
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (id, a) in alg.quiver().arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let ma = &m.action[id];
        let na = &n.action[id];
        // (f_t M_α - N_α f_s)[r][c] = Σ_k f_t[r][k] M_α[k][c] - Σ_k N_α[r][k] f_s[k][c]
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![f.zero(); unknowns];
                for k in 0..m.dims[t] {
                    row[var(t, r, k)] += ma[(k, c)];
                }
                for k in 0..n.dims[s] {
                    row[var(s, k, c)] -= na[(r, k)];
                }
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = Matrix::from_rows(f, unknowns, &rows);
    let basis = if rows.is_empty() {
        (0..unknowns).map(|k| unit(f, unknowns, k)).collect()
    } else {
        sys.nullspace()
    };
    Ok(basis
        .into_iter()
        .map(|x| ModuleMap {
            maps: (0..nv)
                .map(|v| {
                    let mut mat = Matrix::zeros(f, n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            mat[(r, c)] = x[var(v, r, c)];
                        }
                    }
                    mat
                })
                .collect(),
        })
        .collect())
}

pub fn hom_dim(alg: &Algebra, m: &Module, n: &Module) -> Result<usize> {
    Ok(hom_space(alg, m, n)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Presentation;

    fn a3() -> Algebra {
        Presentation::new(Field::Rationals, 3)
            .arrow("a", 1, 2)
            .arrow("b", 2, 3)
            .relation(&[(1, "b*a")])
            .build()
            .unwrap()
    }

    #[test]
    fn projective_dimension_vectors() {
        let a = a3();
        assert_eq!(Module::projective(&a, 0).unwrap().dims(), &[1, 1, 0]);
        assert_eq!(Module::projective(&a, 1).unwrap().dims(), &[0, 1, 1]);
        assert_eq!(Module::projective(&a, 2).unwrap().dims(), &[0, 0, 1]);
        for i in 0..3 {
            assert!(Module::projective(&a, i).unwrap().satisfies_relations(&a));
        }
        assert!(matches!(Module::simple(&a, 7), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn hom_from_projective_is_fiber() {
        let a = a3();
        let p1 = Module::projective(&a, 1).unwrap();
        for i in 0..3 {
            let pi = Module::projective(&a, i).unwrap();
            assert_eq!(hom_dim(&a, &pi, &p1).unwrap(), p1.dims()[i]);
        }
    }

    #[test]
    fn radical_and_top() {
        let t = Presentation::new(Field::Rationals, 1)
            .arrow("t", 1, 1)
            .relation(&[(1, "t*t*t")])
            .build()
            .unwrap();
        let p = Module::projective(&t, 0).unwrap();
        assert_eq!(p.radical(&t).dim(), 2);
        let (top, proj) = p.top(&t);
        assert_eq!(top.dims(), &[1]);
        assert!(proj.is_homomorphism(&t, &p, &top));
    }

    #[test]
    fn injective_is_dual_of_opposite_projective() {
        let a = a3();
        let i1 = Module::injective(&a, 1).unwrap();
        assert_eq!(i1.dims(), &[1, 1, 0]);
        assert!(i1.satisfies_relations(&a));
    }
}
