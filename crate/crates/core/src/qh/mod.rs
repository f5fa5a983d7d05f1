//! Quasi-hereditary structures, standard modules and exact Borel data.

mod borel;
mod conde;
mod coring;
mod enumerate;
mod essential;
mod filtration;
mod poset;
mod right_algebra;
mod standard;

pub use borel::{borel_data, BorelData, VbarGenerator};
pub use conde::{conde_along, conde_criterion, conde_multiplicities};
pub use coring::{roiter_coring, CoringData, CoringReport};
pub use enumerate::{enumerate_qh_structures, QhStructures, DEFAULT_ENUMERATION_CAP};
pub use essential::{essential_order, EssentialOrder};
pub use filtration::{delta_filtration, nabla_filtration, Filtration};
pub use poset::{conde_poset, dihedral_bruhat, FinitePoset};
pub use right_algebra::{right_algebra, RightAlgebraReport};
pub use standard::{is_quasi_hereditary, standard_modules, QhVerdict, StandardSystem};

use crate::error::{Error, Result};

/// A strict partial order on `0..n`; `less[i][j]` means `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightPoset {
    less: Vec<Vec<bool>>,
}

impl WeightPoset {
    /// Transitive closure of the given strict relations.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut less = vec![vec![false; n]; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset(format!("pair ({a},{b}) out of range")));
            }
            less[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        if (0..n).any(|i| less[i][i]) {
            return Err(Error::InvalidPoset("relation has a cycle".into()));
        }
        Ok(WeightPoset { less })
    }

    /// Total order listing vertices from smallest to largest.
    pub fn total(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in order {
            if v >= n || seen[v] {
                return Err(Error::InvalidPoset("not a permutation".into()));
            }
            seen[v] = true;
        }
        let pairs: Vec<(usize, usize)> = order.windows(2).map(|w| (w[0], w[1])).collect();
        Self::from_relations(n, &pairs)
    }

    /// `0 < 1 < ... < n-1`.
    pub fn natural(n: usize) -> Self {
        Self::total(&(0..n).collect::<Vec<_>>()).expect("identity permutation")
    }

    pub fn discrete(n: usize) -> Self {
        WeightPoset { less: vec![vec![false; n]; n] }
    }

    pub fn len(&self) -> usize {
        self.less.len()
    }

    pub fn is_empty(&self) -> bool {
        self.less.is_empty()
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.less[i][j]
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        i == j || self.less[i][j]
    }

    pub fn is_minimal(&self, i: usize) -> bool {
        (0..self.len()).all(|j| !self.less[j][i])
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        (0..self.len()).all(|j| !self.less[i][j])
    }

    /// Smallest-first topological order, ties broken by vertex index.
    pub fn linear_extension(&self) -> Vec<usize> {
        self.extension(false)
    }

    /// Another linear extension, ties broken by largest index.
    pub fn linear_extension_rev(&self) -> Vec<usize> {
        self.extension(true)
    }

    fn extension(&self, rev: bool) -> Vec<usize> {
        let n = self.len();
        let mut done = vec![false; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let ready = (0..n).filter(|&i| !done[i] && (0..n).all(|j| done[j] || !self.less[j][i]));
            let v = if rev { ready.max() } else { ready.min() }.expect("acyclic");
            done[v] = true;
            out.push(v);
        }
        out
    }

    /// Pairs `(i, j)` with `i < j`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| self.less[i][j]).collect()
    }

    /// Covering pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        self.relations()
            .into_iter()
            .filter(|&(i, j)| !(0..n).any(|k| self.less[i][k] && self.less[k][j]))
            .collect()
    }
}
