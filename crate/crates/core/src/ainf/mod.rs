//! A-infinity structures on Ext algebras.

mod generation;
pub(crate) mod koszul;
mod mc;
mod merkulov;
mod stasheff;

use std::collections::HashMap;

use crate::field::{Field, Scalar};

pub use generation::{check_degree_one_generation, quadratic_vanishing_check, GenerationReport, VanishingReport};
pub use koszul::{koszul_reconstruct, PresentationSketch, Reconstruction};
pub use mc::{maurer_cartan_check, McElement, Obstruction};
pub use merkulov::{merkulov, MerkulovEngine, SplittingPolicy};
pub use stasheff::{check_stasheff, stasheff_lhs, StasheffReport};

/// A basis element of the A-infinity algebra: a class in block
/// `src -> tgt` of cohomological degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub degree: i64,
    pub src: usize,
    pub tgt: usize,
    pub internal: Option<i64>,
}

pub type SparseVec = Vec<(usize, Scalar)>;

/// Minimal A-infinity algebra given by tables of `m_n` on basis tuples.
///
/// `m_n(a_1, ..., a_n)` is only defined for composable tuples, i.e.
/// `src(a_k) = tgt(a_{k+1})`; `m_2(a, b)` is the composition `a ∘ b`.
#[derive(Clone, Debug)]
pub struct AInfinity {
    pub field: Field,
    pub num_blocks: usize,
    pub basis: Vec<Generator>,
    pub arity_bound: usize,
    /// Outputs of degree `>= limit` are unknown (truncation).
    pub limit: Option<i64>,
    /// `tables[n]` maps a tuple of basis indices to `m_n` of it.
    pub tables: Vec<HashMap<Vec<usize>, SparseVec>>,
}

impl AInfinity {
    pub fn degree(&self, tuple: &[usize]) -> i64 {
        tuple.iter().map(|&a| self.basis[a].degree).sum::<i64>() + 2 - tuple.len() as i64
    }

    pub fn composable(&self, tuple: &[usize]) -> bool {
        tuple.windows(2).all(|w| self.basis[w[0]].src == self.basis[w[1]].tgt)
    }

    pub fn known(&self, degree: i64) -> bool {
        self.limit.is_none_or(|l| degree < l)
    }

    /// `m_n` on a basis tuple; `None` when the value is unknown because of
    /// truncation or was not computed.
    pub fn m(&self, tuple: &[usize]) -> Option<SparseVec> {
        let n = tuple.len();
        if n < 2 || !self.composable(tuple) {
            return Some(Vec::new());
        }
        let d = self.degree(tuple);
        if !self.known(d) {
            return None;
        }
        if !self.basis.iter().any(|g| g.degree == d) {
            return Some(Vec::new());
        }
        if n >= self.tables.len() {
            return None;
        }
        self.tables[n].get(tuple).cloned()
    }

    /// Indices of basis elements of a given degree.
    pub fn of_degree(&self, d: i64) -> Vec<usize> {
        (0..self.basis.len()).filter(|&k| self.basis[k].degree == d).collect()
    }

    /// Indices of basis elements of degree `d` in block `src -> tgt`.
    pub fn block(&self, d: i64, src: usize, tgt: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&k| {
                let g = &self.basis[k];
                g.degree == d && g.src == src && g.tgt == tgt
            })
            .collect()
    }

    /// Composable tuples of arity `n` with degree sum at most `max_sum`.
    pub fn tuples(&self, n: usize, max_sum: i64) -> Vec<Vec<usize>> {
        let min_deg = self.basis.iter().map(|g| g.degree).min().unwrap_or(0);
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.extend(n, max_sum, min_deg, &mut stack, 0, &mut out);
        out
    }

    /// Composable tuples of arity `n` all of whose entries have degree `d`.
    pub fn tuples_in_degree(&self, n: usize, d: i64) -> Vec<Vec<usize>> {
        let pool = self.of_degree(d);
        let mut out: Vec<Vec<usize>> = pool.iter().map(|&g| vec![g]).collect();
        for _ in 1..n {
            let mut next = Vec::new();
            for t in &out {
                let last = self.basis[*t.last().unwrap()].src;
                for &g in &pool {
                    if self.basis[g].tgt == last {
                        let mut u = t.clone();
                        u.push(g);
                        next.push(u);
                    }
                }
            }
            out = next;
        }
        out
    }

    fn extend(&self, n: usize, max_sum: i64, min_deg: i64, stack: &mut Vec<usize>, sum: i64, out: &mut Vec<Vec<usize>>) {
        if stack.len() == n {
            out.push(stack.clone());
            return;
        }
        let rest = (n - stack.len() - 1) as i64;
        for c in 0..self.basis.len() {
            if let Some(&a) = stack.last() {
                if self.basis[a].src != self.basis[c].tgt {
                    continue;
                }
            }
            let s = sum + self.basis[c].degree;
            if s + rest * min_deg > max_sum {
                continue;
            }
            stack.push(c);
            self.extend(n, max_sum, min_deg, stack, s, out);
            stack.pop();
        }
    }

    /// Number of tuples stored per arity.
    pub fn table_sizes(&self) -> Vec<usize> {
        self.tables.iter().map(|t| t.len()).collect()
    }

    /// Whether `m_n` vanishes on every stored tuple of arity `n`.
    pub fn vanishes(&self, n: usize) -> bool {
        self.tables.get(n).is_none_or(|t| t.values().all(|v| v.is_empty()))
    }

    /// A copy with one table entry replaced (used for negative controls).
    pub fn with_entry(&self, tuple: Vec<usize>, value: SparseVec) -> AInfinity {
        let mut out = self.clone();
        let n = tuple.len();
        out.tables[n].insert(tuple, value);
        out
    }
}

/// Adds `c * v` into a sparse accumulator keyed by basis index.
pub(crate) fn accumulate(acc: &mut HashMap<usize, Scalar>, c: Scalar, v: &[(usize, Scalar)]) {
    for &(k, x) in v {
        *acc.entry(k).or_insert(Scalar::from(0)) += c * x;
    }
}

pub(crate) fn to_sparse(acc: HashMap<usize, Scalar>) -> SparseVec {
    let mut v: SparseVec = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    v.sort_by_key(|t| t.0);
    v
}

pub(crate) fn sign(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        Scalar::from(1)
    } else {
        Scalar::from(-1)
    }
}
