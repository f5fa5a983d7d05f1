//! Dense exact matrices and incremental row reduction.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::field::{Field, Scalar};

/// A dense row-major matrix over an exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| x + field.zero()));
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        Self::from_rows(field, cols.len(), &transpose_vecs(rows, cols))
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                let mut s = self.field.zero();
                for (j, &x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        s += self[(i, j)] * x;
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(-self.field.one()))
    }

    pub fn scale(&self, c: Scalar) -> Matrix {
        let data = self.data.iter().map(|&a| a * c).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)];
            }
        }
        out
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)];
            }
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)];
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                m[(r, j)] *= inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)];
                    for j in c..m.cols {
                        let v = m[(r, j)];
                        if !v.is_zero() {
                            m[(i, j)] -= f * v;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column, each with
    /// a 1 in its free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let zero = self.field.zero();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![zero; self.cols];
            v[free] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)];
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::from_cols(self.field, self.rows, &[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)];
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(self.field, n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let idx: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..2 * n).collect();
        Some(r.submatrix(&idx, &right))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

fn transpose_vecs(rows: usize, cols: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    (0..rows).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut s = Scalar::from(0);
    for (&x, &y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

pub fn axpy(y: &mut [Scalar], c: Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, &b) in y.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Incrementally maintained echelon basis of a subspace of `field^dim`.
///
/// Every inserted vector is remembered as a combination of the original
/// inputs, so [`Reducer::coords`] expresses a member of the span in terms
/// of the accepted vectors (in acceptance order).
#[derive(Clone, Debug)]
pub struct Reducer {
    field: Field,
    dim: usize,
    // (pivot column, reduced row with 1 at pivot, combination of accepted inputs)
    rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
    accepted: usize,
}

impl Reducer {
    pub fn new(field: Field, dim: usize) -> Self {
        Reducer { field, dim, rows: Vec::new(), accepted: 0 }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; returns the remainder and the
    /// combination of accepted vectors subtracted.
    fn reduce_full(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut r: Vec<Scalar> = v.iter().map(|&x| x + self.field.zero()).collect();
        let mut comb = vec![self.field.zero(); self.accepted];
        for (p, row, c) in &self.rows {
            let f = r[*p];
            if !f.is_zero() {
                axpy(&mut r, -f, row);
                for (k, &x) in c.iter().enumerate() {
                    if !x.is_zero() {
                        comb[k] += f * x;
                    }
                }
            }
        }
        (r, comb)
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.reduce_full(v).0
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Adds `v` to the span. Returns true if it was independent.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim);
        let (mut r, comb) = self.reduce_full(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        // Combination expressing r: v - Σ comb_k acc_k.
        let mut c: Vec<Scalar> = comb.iter().map(|&x| -x).collect();
        c.push(self.field.one());
        for (_, _, old) in self.rows.iter_mut() {
            old.push(self.field.zero());
        }
        self.accepted += 1;
        let inv = r[p].inv();
        for x in r.iter_mut() {
            *x *= inv;
        }
        for x in c.iter_mut() {
            *x *= inv;
        }
        // Keep older rows reduced at the new pivot.
        for (_, row, oc) in self.rows.iter_mut() {
            let f = row[p];
            if !f.is_zero() {
                axpy(row, -f, &r);
                axpy(oc, -f, &c);
            }
        }
        self.rows.push((p, r, c));
        true
    }

    /// Coordinates of `v` in terms of the accepted vectors, or `None` when
    /// `v` is outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (r, comb) = self.reduce_full(v);
        is_zero_vec(&r).then_some(comb)
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|(p, _, _)| *p).collect();
        p.sort_unstable();
        p
    }
}

/// Dimension of the span of `vectors`.
pub fn span_rank(field: Field, dim: usize, vectors: &[Vec<Scalar>]) -> usize {
    let mut r = Reducer::new(field, dim);
    for v in vectors {
        r.insert(v);
    }
    r.rank()
}

/// Greedily picks indices of `candidates` that extend `base` to a basis of
/// `span(base ∪ candidates)`.
pub fn complement_indices(
    field: Field,
    dim: usize,
    base: &[Vec<Scalar>],
    candidates: &[Vec<Scalar>],
) -> Vec<usize> {
    let mut r = Reducer::new(field, dim);
    for b in base {
        r.insert(b);
    }
    candidates
        .iter()
        .enumerate()
        .filter_map(|(k, c)| r.insert(c).then_some(k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rationals;
        let cols = rows[0].len();
        let r: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
        Matrix::from_rows(f, cols, &r)
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vec(&m.mul_vec(&ns[0])));
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = q(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Field::Rationals, 2));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = q(&[&[1, 1], &[2, 2]]);
        let f = Field::Rationals;
        assert!(m.solve(&[f.from_i64(1), f.from_i64(3)]).is_none());
        let x = m.solve(&[f.from_i64(1), f.from_i64(2)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![f.from_i64(1), f.from_i64(2)]);
    }

    #[test]
    fn reducer_coordinates() {
        let f = Field::Rationals;
        let v = |a: &[i64]| a.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let mut r = Reducer::new(f, 3);
        assert!(r.insert(&v(&[1, 1, 0])));
        assert!(r.insert(&v(&[0, 1, 1])));
        assert!(!r.insert(&v(&[1, 2, 1])));
        let c = r.coords(&v(&[2, 5, 3])).unwrap();
        assert_eq!(c, v(&[2, 3]));
        assert!(r.coords(&v(&[0, 0, 1])).is_none());
    }
}
