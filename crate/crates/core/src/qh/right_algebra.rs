//! The right algebra `R = Hom_A(V, A)` of the coring, with product
//! `(f·g)(c) = Σ g(c₁ f(c₂))` and unit `ε`.
//!
//! Since `V` is left free on the generators `b`, `R = ⊕_b e_{t(b)} A` as a
//! vector space; basis element `(b, r)` sends `b` to the path `r` and every
//! other generator to zero.

use std::collections::HashMap;

use super::coring::{CoringData, Gen};
use super::standard::StandardSystem;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{is_zero_vec, Matrix};

#[derive(Clone, Debug)]
pub struct RightAlgebraReport {
    pub dim: usize,
    pub associative: bool,
    /// `A -> R`, `a ↦ ε(-)a`, is an algebra map.
    pub contains_a: bool,
    /// Right multiplication by `A` is pointwise, so `R ≅ ⊕_b e_{t(b)}A`
    /// as right `A`-modules.
    pub projective: bool,
    /// Summands `e_i A` of the decomposition, counted per vertex.
    pub summands: Vec<usize>,
    /// `dim R ⊗_A L_i`.
    pub induced_simples: Vec<usize>,
    /// `Σ_j ℓ_j [Δ_i : L_j]`.
    pub expected_induced: Vec<usize>,
    /// `dim R / rad R`; `None` when the characteristic is too small for the
    /// trace form.
    pub semisimple_dim: Option<usize>,
    /// Size of a complete set of primitive orthogonal idempotents.
    pub idempotents: Option<usize>,
    /// Number of simple components of `R / rad R`.
    pub components: Option<usize>,
}

impl RightAlgebraReport {
    pub fn induced_match(&self) -> bool {
        self.induced_simples == self.expected_induced
    }
}

struct Table {
    basis: Vec<(Gen, usize)>,
    index: HashMap<(Gen, usize), usize>,
    mul: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl Table {
    fn new(c: &CoringData) -> Self {
        let alg = &c.borel.algebra;
        let mut basis = Vec::new();
        for &g in &c.gens {
            let t = c.left_vertex(g);
            for (r, p) in alg.basis().iter().enumerate() {
                if p.target == t {
                    basis.push((g, r));
                }
            }
        }
        let index = basis.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let mut t = Table { basis, index, mul: Vec::new() };
        let n = t.basis.len();
        t.mul = (0..n).map(|i| (0..n).map(|j| t.product(c, i, j)).collect()).collect();
        t
    }

    fn product(&self, c: &CoringData, f: usize, g: usize) -> Vec<(usize, Scalar)> {
        let alg = &c.borel.algebra;
        let (b0, r0) = self.basis[f];
        let (b1, r1) = self.basis[g];
        let mut acc: HashMap<usize, Scalar> = HashMap::new();
        for (k, &cg) in c.gens.iter().enumerate() {
            for (&(a, g1, g2), &x) in &c.mu[k] {
                if g2 != b0 {
                    continue;
                }
                for ((a2, g3), y) in c.times(a, g1, r0) {
                    if g3 != b1 {
                        continue;
                    }
                    for &(s, z) in alg.mul_basis(a2, r1) {
                        let slot = self.index[&(cg, s)];
                        *acc.entry(slot).or_insert(Scalar::from(0)) += x * y * z;
                    }
                }
            }
        }
        let mut v: Vec<_> = acc.into_iter().filter(|(_, s)| !s.is_zero()).collect();
        v.sort_by_key(|&(k, _)| k);
        v
    }

    fn len(&self) -> usize {
        self.basis.len()
    }

    fn mul_dense(&self, f: Field, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![f.zero(); self.len()];
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for &(k, z) in &self.mul[i][j] {
                    out[k] += xi * yj * z;
                }
            }
        }
        out
    }
}

/// Rational structure constants are reduced modulo this prime before the
/// rank computations, which would otherwise overflow.
const WORKING_PRIME: u64 = 2_147_483_647;

/// A field in which the trace form detects the radical of an `n`-dimensional
/// algebra.
fn working_field(field: Field, n: usize) -> Option<Field> {
    match field {
        Field::Rationals => Some(Field::Prime(WORKING_PRIME)),
        Field::Prime(p) if p as usize > n => Some(field),
        Field::Prime(_) => None,
    }
}

fn reduce(x: Scalar, f: Field) -> Scalar {
    let Field::Prime(p) = f else { return x };
    let (num, den) = x.parts();
    let m = |v: i128| f.from_i64(v.rem_euclid(p as i128) as i64);
    m(num) * m(den).inv()
}

impl Table {
    fn reduced(&self, f: Field) -> Table {
        let mul = self
            .mul
            .iter()
            .map(|row| row.iter().map(|v| v.iter().map(|&(k, x)| (k, reduce(x, f))).collect()).collect())
            .collect();
        Table { basis: self.basis.clone(), index: self.index.clone(), mul }
    }
}

fn sparse_eq(a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.0 == y.0 && x.1 == y.1)
}

/// Builds `R` and checks the unit, associativity, the embedding of `A`, and
/// the size of `R / rad R` against the multiplicities `ell`.
pub fn right_algebra(c: &CoringData, sys: &StandardSystem, ell: &[i64]) -> Result<RightAlgebraReport> {
    let alg = &c.borel.algebra;
    let field = alg.field();
    let nv = alg.num_vertices();
    let t = Table::new(c);
    let n = t.len();

    let unit: Vec<(usize, Scalar)> = {
        let mut u: Vec<_> =
            (0..nv).map(|i| (t.index[&(Gen::Omega(i), alg.idempotent(i))], Scalar::from(1))).collect();
        u.sort_by_key(|&(k, _)| k);
        u
    };
    for f in 0..n {
        let me = vec![(f, Scalar::from(1))];
        let left: Vec<_> = sparse_combine(&t, &unit, &me);
        let right: Vec<_> = sparse_combine(&t, &me, &unit);
        if !sparse_eq(&left, &me) || !sparse_eq(&right, &me) {
            let (g, r) = t.basis[f];
            return Err(Error::UnitFailure(format!("ε is not a two-sided unit on ({g:?}, {r})")));
        }
    }

    let associative = (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let ij = sparse_combine(&t, &t.mul[i][j], &[(k, Scalar::from(1))]);
                let jk = sparse_combine(&t, &[(i, Scalar::from(1))], &t.mul[j][k]);
                sparse_eq(&ij, &jk)
            })
        })
    });

    let iota = |a: usize| t.index[&(Gen::Omega(alg.basis_path(a).target), a)];
    let contains_a = (0..alg.dim()).all(|a| {
        (0..alg.dim()).all(|b| {
            let lhs = &t.mul[iota(a)][iota(b)];
            let rhs: Vec<_> = alg.mul_basis(a, b).iter().map(|&(s, x)| (iota(s), x)).collect();
            let mut rhs = rhs;
            rhs.sort_by_key(|&(k, _)| k);
            sparse_eq(lhs, &rhs)
        })
    });

    let projective = (0..n).all(|f| {
        let (g, r) = t.basis[f];
        (0..alg.dim()).all(|a| {
            let mut pointwise: Vec<_> = alg.mul_basis(r, a).iter().map(|&(s, x)| (t.index[&(g, s)], x)).collect();
            pointwise.sort_by_key(|&(k, _)| k);
            sparse_eq(&t.mul[f][iota(a)], &pointwise)
        })
    });

    let mut summands = vec![0; nv];
    for &g in &c.gens {
        summands[c.left_vertex(g)] += 1;
    }
    // R ⊗_A L_i = ⊕_b e_{t(b)} L_i.
    let induced_simples = summands.clone();
    let expected_induced = (0..nv)
        .map(|i| (0..nv).map(|j| ell[j].max(0) as usize * sys.delta_mult(i, j)).sum())
        .collect();

    let (semisimple_dim, idempotents, components) = match working_field(field, n) {
        Some(wf) => {
            let (d, e, k) = semisimple_data(&t.reduced(wf), wf);
            (Some(d), Some(e), Some(k))
        }
        None => (None, None, None),
    };

    Ok(RightAlgebraReport {
        dim: n,
        associative,
        contains_a,
        projective,
        summands,
        induced_simples,
        expected_induced,
        semisimple_dim,
        idempotents,
        components,
    })
}

fn sparse_combine(t: &Table, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
    let mut acc: HashMap<usize, Scalar> = HashMap::new();
    for &(i, a) in x {
        for &(j, b) in y {
            for &(k, z) in &t.mul[i][j] {
                *acc.entry(k).or_insert(Scalar::from(0)) += a * b * z;
            }
        }
    }
    let mut v: Vec<_> = acc.into_iter().filter(|(_, s)| !s.is_zero()).collect();
    v.sort_by_key(|&(k, _)| k);
    v
}

/// `(dim R/rad R, Σ n_k, #components)` for `R/rad R ≅ Π M_{n_k}(D_k)`.
///
/// The radical is the kernel of the trace form; the number of primitive
/// idempotents is the centralizer dimension of a generic element.
fn semisimple_data(t: &Table, field: Field) -> (usize, usize, usize) {
    let n = t.len();
    let tau: Vec<Scalar> = (0..n)
        .map(|k| {
            (0..n).fold(field.zero(), |s, j| {
                t.mul[k][j].iter().filter(|&&(i, _)| i == j).fold(s, |s, &(_, x)| s + x)
            })
        })
        .collect();
    let gram: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| t.mul[i][j].iter().fold(field.zero(), |s, &(k, x)| s + x * tau[k]))
                .collect()
        })
        .collect();
    let rad = Matrix::from_rows(field, n, &gram).nullspace();
    let r = rad.len();

    // dim of {y : [x, y] ∈ rad}, given the images [x, e_j].
    let kernel_mod_rad = |images: Vec<Vec<Scalar>>| -> usize {
        let mut rows = images;
        rows.extend(rad.iter().cloned());
        n - (Matrix::from_rows(field, n, &rows).rank() - r)
    };
    let commutators = |x: &[Scalar]| -> Vec<Vec<Scalar>> {
        (0..n)
            .map(|j| {
                let mut e = vec![field.zero(); n];
                e[j] = field.one();
                let mut v = t.mul_dense(field, x, &e);
                let w = t.mul_dense(field, &e, x);
                for (a, b) in v.iter_mut().zip(w) {
                    *a -= b;
                }
                v
            })
            .collect()
    };

    let mut idempotents = usize::MAX;
    for seed in 1..=3u64 {
        let x: Vec<Scalar> = (0..n as u64)
            .map(|k| field.from_i64(((k * 7919 + seed * 104729) * (k + seed) % 211) as i64 + 1))
            .collect();
        idempotents = idempotents.min(kernel_mod_rad(commutators(&x)) - r);
    }

    // Center of R/rad: y with [b, y] ∈ rad for every basis element b.
    let mut all = Vec::new();
    for b in 0..n {
        let mut e = vec![field.zero(); n];
        e[b] = field.one();
        all.extend(commutators(&e).into_iter().enumerate().map(|(j, v)| (b, j, v)));
    }
    // Solve for y: Σ_j y_j [b, e_j] ∈ rad for all b. Stack the linear maps
    // y ↦ [b, y] composed with the projection to R/rad.
    let proj = quotient_projection(field, n, &rad);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for b in 0..n {
        for p in &proj {
            let row: Vec<Scalar> = (0..n)
                .map(|j| {
                    let v = &all[b * n + j].2;
                    crate::matrix::dot(p, v)
                })
                .collect();
            if !is_zero_vec(&row) {
                rows.push(row);
            }
        }
    }
    let centre = n - Matrix::from_rows(field, n, &rows).rank() - r;
    (n - r, idempotents, centre)
}

/// Linear functionals whose common kernel is `span(rad)`.
fn quotient_projection(field: crate::field::Field, n: usize, rad: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if rad.is_empty() {
        return (0..n)
            .map(|i| {
                let mut e = vec![field.zero(); n];
                e[i] = field.one();
                e
            })
            .collect();
    }
    Matrix::from_rows(field, n, rad).nullspace()
}
