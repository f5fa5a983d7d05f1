//! Quasi-hereditary structures up to equality of standard modules.

use std::collections::HashSet;

use super::standard::{basic_system, is_quasi_hereditary, killed};
use super::WeightPoset;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::module::Module;
use crate::par::{self, Execution};

pub const DEFAULT_ENUMERATION_CAP: usize = 7;

#[derive(Clone, Debug)]
pub struct QhStructures {
    /// One total order (smallest first) per structure, in lexicographic order.
    pub orders: Vec<Vec<usize>>,
    /// Dimension vectors of the standard modules of each structure.
    pub delta_dims: Vec<Vec<Vec<usize>>>,
}

impl QhStructures {
    pub fn count(&self) -> usize {
        self.orders.len()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// Canonical form of the kernels `P_i -> Δ_i`, which determine the
/// standard modules as quotients of the projectives.
fn key(alg: &Algebra, poset: &WeightPoset, ps: &[Module]) -> String {
    let mut s = String::new();
    for (i, p) in ps.iter().enumerate() {
        let sub = killed(alg, poset, p, i);
        for (v, vs) in sub.vectors.iter().enumerate() {
            let m = Matrix::from_rows(alg.field(), p.dims()[v], vs);
            let (r, piv) = m.rref();
            for row in 0..piv.len() {
                for x in r.row(row) {
                    s.push_str(&x.to_string());
                    s.push(',');
                }
                s.push(';');
            }
            s.push('|');
        }
        s.push('#');
    }
    s
}

/// All total orders, kept when quasi-hereditary, merged by standard modules.
pub fn enumerate_qh_structures(alg: &Algebra, cap: usize, exec: Execution) -> Result<QhStructures> {
    let n = alg.num_vertices();
    if n > cap {
        return Err(Error::TooManyVertices(n, cap));
    }
    let ps = (0..n).map(|i| Module::projective(alg, i)).collect::<Result<Vec<_>>>()?;
    let perms = permutations(n);
    let results = par::map(exec, &perms, |order| -> Result<Option<(String, Vec<Vec<usize>>)>> {
        let poset = WeightPoset::total(order)?;
        let sys = basic_system(alg, &poset)?;
        if !is_quasi_hereditary(alg, &sys).quasi_hereditary {
            return Ok(None);
        }
        let dims = sys.delta.iter().map(|d| d.dims().to_vec()).collect();
        Ok(Some((key(alg, &poset, &ps), dims)))
    });
    let mut seen = HashSet::new();
    let mut out = QhStructures { orders: Vec::new(), delta_dims: Vec::new() };
    for (order, r) in perms.into_iter().zip(results) {
        if let Some((k, dims)) = r? {
            if seen.insert(k) {
                out.orders.push(order);
                out.delta_dims.push(dims);
            }
        }
    }
    Ok(out)
}
