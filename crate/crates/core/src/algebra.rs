//! Bound quiver algebras `kQ/I` with a path normal-form basis.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Reducer;
use crate::quiver::{Path, Quiver, Relation};

pub const DEFAULT_MAX_NILPOTENCY: usize = 64;

/// A dense algebra element: coefficients on the normal-form basis.
pub type Elem = Vec<Scalar>;

type Sparse = Vec<(usize, Scalar)>;

/// A finite-dimensional algebra `kQ/I` with `Q_+^N ⊆ I ⊆ Q_+^2`.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    quiver: Quiver,
    relations: Vec<Relation>,
    nilpotency: usize,
    max_nilpotency: usize,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    // Non-basis paths of length < N, rewritten on the basis.
    reductions: HashMap<Path, Sparse>,
    // mul[x * dim + y] = x * y (first y, then x).
    mul: Vec<Sparse>,
    // blocks[i][j] = basis indices of paths from i to j.
    blocks: Vec<Vec<Vec<usize>>>,
    // Position of each basis element inside its block.
    positions: Vec<usize>,
}

fn normalize(field: Field, q: &Quiver, r: &Relation) -> Result<Relation> {
    let mut terms: Vec<(Scalar, Path)> = Vec::new();
    for (c, p) in &r.terms {
        if p.len() < 2 {
            return Err(Error::NonAdmissible(q.path_name(p)));
        }
        let c = *c + field.zero();
        match terms.iter_mut().find(|t| t.1 == *p) {
            Some(t) => t.0 += c,
            None => terms.push((c, p.clone())),
        }
    }
    terms.retain(|t| !t.0.is_zero());
    if let Some((_, first)) = terms.first() {
        for (_, p) in &terms {
            if (p.source, p.target) != (first.source, first.target) {
                return Err(Error::InconsistentRelation(r.display(q)));
            }
        }
    }
    terms.sort_by(|a, b| b.1.cmp(&a.1));
    Ok(Relation::new(terms))
}

/// All paths of length `0..=max`.
fn paths_upto(q: &Quiver, max: usize) -> Vec<Path> {
    (0..=max).flat_map(|d| q.paths_of_length(d)).collect()
}

/// Terms of `u * r * v`, i.e. first `v`, then `r`, then `u`.
fn sandwich(u: &Path, r: &Relation, v: &Path) -> Vec<(Scalar, Path)> {
    r.terms
        .iter()
        .map(|(c, p)| (*c, u.compose(&p.compose(v).unwrap()).unwrap()))
        .collect()
}

struct IdealSpan<'a> {
    relations: &'a [Relation],
    paths: Vec<Path>,
}

impl<'a> IdealSpan<'a> {
    fn new(quiver: &'a Quiver, relations: &'a [Relation], max_len: usize) -> Self {
        IdealSpan { relations, paths: paths_upto(quiver, max_len) }
    }

    /// Calls `f` on every `u r v` whose extra length `|u|+|v|` is at most
    /// `budget(r)`.
    fn for_each(&self, budget: impl Fn(&Relation) -> Option<usize>, mut f: impl FnMut(Vec<(Scalar, Path)>)) {
        for r in self.relations {
            let Some(b) = budget(r) else { continue };
            let (s, t) = (r.source().unwrap(), r.target().unwrap());
            for v in self.paths.iter().filter(|v| v.target == s && v.len() <= b) {
                for u in self
                    .paths
                    .iter()
                    .filter(|u| u.source == t && u.len() + v.len() <= b)
                {
                    f(sandwich(u, r, v));
                }
            }
        }
    }
}

impl Algebra {
    pub fn build(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: Field,
        max_nilpotency: usize,
    ) -> Result<Self> {
        let relations: Vec<Relation> = relations
            .iter()
            .map(|r| normalize(field, &quiver, r))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|r| !r.terms.is_empty())
            .collect();
        let nilpotency = find_nilpotency(&quiver, &relations, field, max_nilpotency)?;
        Self::with_nilpotency(quiver, relations, field, nilpotency, max_nilpotency)
    }

    fn with_nilpotency(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: Field,
        n: usize,
        max_nilpotency: usize,
    ) -> Result<Self> {
        // Columns: all paths of length < N, largest first.
        let mut cols: Vec<Path> = paths_upto(&quiver, n.saturating_sub(1));
        cols.sort_by(|a, b| b.cmp(a));
        let col_of: HashMap<&Path, usize> = cols.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut red = Reducer::new(field, cols.len());
        let span = IdealSpan::new(&quiver, &relations, n.saturating_sub(1));
        span.for_each(
            |r| (r.min_len() < n).then(|| n - 1 - r.min_len()),
            |terms| {
                let mut v = vec![field.zero(); cols.len()];
                for (c, p) in terms {
                    if let Some(&k) = col_of.get(&p) {
                        v[k] += c;
                    }
                }
                red.insert(&v);
            },
        );
        let pivots = red.pivots();
        let mut is_pivot = vec![false; cols.len()];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis: Vec<Path> =
            cols.iter().enumerate().filter(|(k, _)| !is_pivot[*k]).map(|(_, p)| p.clone()).collect();
        basis.sort();
        let index: HashMap<Path, usize> =
            basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();

        let mut reductions = HashMap::new();
        for &p in &pivots {
            let mut unit = vec![field.zero(); cols.len()];
            unit[p] = field.one();
            let rem = red.reduce(&unit);
            // rem = p - (row), supported on non-pivot columns.
            let mut sparse: Sparse = rem
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, &x)| (index[&cols[k]], x))
                .collect();
            sparse.sort_by_key(|t| t.0);
            reductions.insert(cols[p].clone(), sparse);
        }

        let nv = quiver.num_vertices();
        let mut blocks = vec![vec![Vec::new(); nv]; nv];
        let mut positions = Vec::with_capacity(basis.len());
        for (k, p) in basis.iter().enumerate() {
            positions.push(blocks[p.source][p.target].len());
            blocks[p.source][p.target].push(k);
        }
        let mut alg = Algebra {
            field,
            quiver,
            relations,
            nilpotency: n,
            max_nilpotency,
            basis,
            index,
            reductions,
            mul: Vec::new(),
            blocks,
            positions,
        };
        let d = alg.dim();
        let mut mul = Vec::with_capacity(d * d);
        for x in 0..d {
            for y in 0..d {
                mul.push(match alg.basis[x].compose(&alg.basis[y]) {
                    Some(p) => alg.reduce_path(&p),
                    None => Vec::new(),
                });
            }
        }
        alg.mul = mul;
        Ok(alg)
    }

    /// Expresses an arbitrary path on the normal-form basis.
    pub fn reduce_path(&self, p: &Path) -> Vec<(usize, Scalar)> {
        if p.len() >= self.nilpotency {
            return Vec::new();
        }
        if let Some(&i) = self.index.get(p) {
            return vec![(i, self.field.one())];
        }
        self.reductions.get(p).cloned().unwrap_or_default()
    }

    pub fn path_elem(&self, p: &Path) -> Elem {
        let mut v = self.zero();
        for (i, c) in self.reduce_path(p) {
            v[i] += c;
        }
        v
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }
    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }
    pub fn max_nilpotency(&self) -> usize {
        self.max_nilpotency
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }
    pub fn basis_path(&self, k: usize) -> &Path {
        &self.basis[k]
    }

    /// Basis indices of the paths from `from` to `to` (a basis of
    /// `e_to A e_from`).
    pub fn block(&self, from: usize, to: usize) -> &[usize] {
        &self.blocks[from][to]
    }

    /// Position of basis element `k` inside its block.
    pub fn position(&self, k: usize) -> usize {
        self.positions[k]
    }

    /// Whether every relation is a combination of paths of one length, in
    /// which case the basis is graded by path length.
    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(|r| r.is_homogeneous())
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.index[&Path::trivial(v)]
    }

    pub fn arrow_index(&self, a: usize) -> Option<usize> {
        self.index.get(&Path::arrow(&self.quiver, a)).copied()
    }

    pub fn zero(&self) -> Elem {
        vec![self.field.zero(); self.dim()]
    }

    pub fn unit(&self) -> Elem {
        let mut u = self.zero();
        for v in 0..self.num_vertices() {
            u[self.idempotent(v)] = self.field.one();
        }
        u
    }

    pub fn basis_elem(&self, k: usize) -> Elem {
        let mut u = self.zero();
        u[k] = self.field.one();
        u
    }

    /// Product of basis elements `x * y` (first `y`, then `x`).
    pub fn mul_basis(&self, x: usize, y: usize) -> &[(usize, Scalar)] {
        &self.mul[x * self.dim() + y]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Elem {
        let mut out = self.zero();
        for (x, &ax) in a.iter().enumerate() {
            if ax.is_zero() {
                continue;
            }
            for (y, &by) in b.iter().enumerate() {
                if by.is_zero() {
                    continue;
                }
                for &(z, c) in self.mul_basis(x, y) {
                    out[z] += ax * by * c;
                }
            }
        }
        out
    }

    /// Basis elements lying in `rad A` (non-trivial paths).
    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&k| !self.basis[k].is_trivial()).collect()
    }

    pub fn elem_name(&self, e: &[Scalar]) -> String {
        let terms: Vec<(Scalar, Path)> = e
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| (c, self.basis[k].clone()))
            .collect();
        Relation::new(terms).display(&self.quiver)
    }

    /// Arrows reversed, relation paths reversed.
    pub fn opposite(&self) -> Algebra {
        let rels = self
            .relations
            .iter()
            .map(|r| Relation::new(r.terms.iter().map(|(c, p)| (*c, p.reversed())).collect()))
            .collect();
        Algebra::with_nilpotency(
            self.quiver.opposite(),
            rels,
            self.field,
            self.nilpotency,
            self.max_nilpotency,
        )
        .expect("opposite of a valid algebra")
    }

    /// `dim e_j A e_i` for every pair, indexed `[i][j]`.
    pub fn dimension_table(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        (0..n).map(|i| (0..n).map(|j| self.block(i, j).len()).collect()).collect()
    }

    /// Same quiver, relations and field.
    pub fn same_presentation(&self, other: &Algebra) -> bool {
        self.field == other.field
            && self.quiver == other.quiver
            && self.relations == other.relations
    }
}

/// Smallest `D` certified to satisfy `Q_+^D ⊆ I`: every path of length `D`
/// is shown to lie in the span of elements `u r v` whose terms have length
/// at most `D + slack`.
fn find_nilpotency(
    quiver: &Quiver,
    relations: &[Relation],
    field: Field,
    max_nilpotency: usize,
) -> Result<usize> {
    if quiver.arrows().is_empty() {
        return Ok(1);
    }
    let slack = relations.iter().map(|r| r.max_len() - r.min_len()).max().unwrap_or(0);
    for d in 2..=max_nilpotency {
        let targets = quiver.paths_of_length(d);
        if targets.is_empty() {
            return Ok(d);
        }
        if relations.is_empty() {
            continue;
        }
        let m = d + slack;
        let cols = paths_upto(quiver, m);
        let col_of: HashMap<&Path, usize> = cols.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut red = Reducer::new(field, cols.len());
        let span = IdealSpan::new(quiver, relations, m);
        span.for_each(
            |r| (r.max_len() <= m).then(|| m - r.max_len()),
            |terms| {
                let mut v = vec![field.zero(); cols.len()];
                for (c, p) in terms {
                    v[col_of[&p]] += c;
                }
                red.insert(&v);
            },
        );
        let all_in = targets.iter().all(|p| {
            let mut v = vec![field.zero(); cols.len()];
            v[col_of[p]] = field.one();
            red.contains(&v)
        });
        if all_in {
            return Ok(d);
        }
    }
    Err(Error::InfiniteDimensional(max_nilpotency))
}

/// Builder-style helper for writing algebras in code.
pub struct Presentation {
    pub field: Field,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(field: Field, vertices: usize) -> Self {
        Presentation { field, quiver: Quiver::with_vertices(vertices), relations: Vec::new() }
    }

    pub fn arrow(mut self, name: &str, from: usize, to: usize) -> Self {
        self.quiver
            .add_arrow(name, &from.to_string(), &to.to_string())
            .expect("valid arrow");
        self
    }

    /// Adds a relation from `(coefficient, "b*a")` pairs.
    pub fn relation(mut self, terms: &[(i64, &str)]) -> Self {
        let terms = terms
            .iter()
            .map(|&(c, w)| {
                let mut ids: Vec<usize> = w
                    .split('*')
                    .map(|n| self.quiver.arrow_id(n.trim()).expect("known arrow"))
                    .collect();
                ids.reverse();
                let p = Path::from_arrows(&self.quiver, &ids).expect("composable path");
                (self.field.from_i64(c), p)
            })
            .collect();
        self.relations.push(Relation::new(terms));
        self
    }

    pub fn build(self) -> Result<Algebra> {
        Algebra::build(self.quiver, self.relations, self.field, DEFAULT_MAX_NILPOTENCY)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_a3_with_zero_relation() {
        let a = Presentation::new(Field::Rationals, 3)
            .arrow("a", 1, 2)
            .arrow("b", 2, 3)
            .relation(&[(1, "b*a")])
            .build()
            .unwrap();
        assert_eq!(a.dim(), 5);
        let names: Vec<String> = a.basis().iter().map(|p| a.quiver().path_name(p)).collect();
        assert_eq!(names, ["e1", "e2", "e3", "a", "b"]);
        assert_eq!(a.nilpotency(), 2);
    }

    #[test]
    fn truncated_polynomial_ring() {
        let a = Presentation::new(Field::Rationals, 1)
            .arrow("t", 1, 1)
            .relation(&[(1, "t*t*t")])
            .build()
            .unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.nilpotency(), 3);
    }

    #[test]
    fn semisimple() {
        let a = Presentation::new(Field::Prime(3), 4).build().unwrap();
        assert_eq!(a.dim(), 4);
    }

    #[test]
    fn errors() {
        let p = Presentation::new(Field::Rationals, 1).arrow("t", 1, 1);
        assert!(matches!(p.build(), Err(Error::InfiniteDimensional(_))));
        let p = Presentation::new(Field::Rationals, 2)
            .arrow("a", 1, 2)
            .arrow("b", 2, 2)
            .relation(&[(1, "b*a"), (1, "b*b")]);
        assert!(matches!(p.build(), Err(Error::InconsistentRelation(_))));
        let p = Presentation::new(Field::Rationals, 2).arrow("a", 1, 2).relation(&[(1, "a")]);
        assert!(matches!(p.build(), Err(Error::NonAdmissible(_))));
    }

    #[test]
    fn commutativity_relation() {
        // Commutative square: 1 -> 2 -> 4, 1 -> 3 -> 4 with b*a = d*c.
        let a = Presentation::new(Field::Rationals, 4)
            .arrow("a", 1, 2)
            .arrow("b", 2, 4)
            .arrow("c", 1, 3)
            .arrow("d", 3, 4)
            .relation(&[(1, "b*a"), (-1, "d*c")])
            .build()
            .unwrap();
        assert_eq!(a.dim(), 9);
        assert_eq!(a.block(0, 3).len(), 1);
    }
}
