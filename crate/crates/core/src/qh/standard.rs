//! Standard and costandard modules of a weight poset.

use super::filtration::greedy_filtration;
use super::WeightPoset;
use crate::algebra::Algebra;
use crate::dg::DgEnd;
use crate::error::Result;
use crate::ext::{ext_table, SplitOrder, Splitting};
use crate::module::{hom_dim, unit, Module, Subspace};
use crate::par::Execution;
use crate::resolution::resolve_all;

#[derive(Clone, Debug)]
pub struct StandardSystem {
    pub poset: WeightPoset,
    pub projectives: Vec<Module>,
    pub delta: Vec<Module>,
    pub nabla: Vec<Module>,
    /// Standard modules of the opposite algebra; `nabla[i]` is the dual of `op_delta[i]`.
    pub op_delta: Vec<Module>,
    /// `hom[i][j] = dim Hom(Δ_i, Δ_j)`.
    pub hom: Vec<Vec<usize>>,
    /// `ext1[i][j] = dim Ext¹(Δ_i, Δ_j)`.
    pub ext1: Vec<Vec<usize>>,
    /// `(P_i : Δ_j)` when `P_i` has a standard filtration.
    pub proj_mult: Vec<Option<Vec<usize>>>,
}

impl StandardSystem {
    pub fn len(&self) -> usize {
        self.delta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.delta.is_empty()
    }

    /// `[Δ_i : L_j]`.
    pub fn delta_mult(&self, i: usize, j: usize) -> usize {
        self.delta[i].dims()[j]
    }

    /// `[∇_i : L_j]`.
    pub fn nabla_mult(&self, i: usize, j: usize) -> usize {
        self.nabla[i].dims()[j]
    }
}

/// `P_i / ⟨(P_i)_j : j ≰ i⟩`.
pub(crate) fn standard_quotient(alg: &Algebra, poset: &WeightPoset, p: &Module, i: usize) -> Module {
    let sub = killed(alg, poset, p, i);
    p.quotient(alg, &sub).0
}

/// `⟨(P_i)_j : j ≰ i⟩` as a subspace of `P_i`.
pub(crate) fn killed(alg: &Algebra, poset: &WeightPoset, p: &Module, i: usize) -> Subspace {
    let f = alg.field();
    let vectors = (0..alg.num_vertices())
        .map(|j| {
            if poset.le(j, i) {
                Vec::new()
            } else {
                let d = p.dims()[j];
                (0..d).map(|k| unit(f, d, k)).collect()
            }
        })
        .collect();
    p.generate(alg, &Subspace { vectors })
}

pub(crate) fn deltas(alg: &Algebra, poset: &WeightPoset) -> Result<(Vec<Module>, Vec<Module>)> {
    let n = alg.num_vertices();
    let ps = (0..n).map(|i| Module::projective(alg, i)).collect::<Result<Vec<_>>>()?;
    let ds = (0..n).map(|i| standard_quotient(alg, poset, &ps[i], i)).collect();
    Ok((ps, ds))
}

/// Standard system without `Ext¹` between standards (which needs
/// resolutions); enough for the quasi-heredity test.
pub(crate) fn basic_system(alg: &Algebra, poset: &WeightPoset) -> Result<StandardSystem> {
    let n = alg.num_vertices();
    let (projectives, delta) = deltas(alg, poset)?;
    let op = alg.opposite();
    let (_, op_delta) = deltas(&op, poset)?;
    let nabla: Vec<Module> = op_delta.iter().map(|m| m.dualize()).collect();
    let mut hom = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            hom[i][j] = hom_dim(alg, &delta[i], &delta[j])?;
        }
    }
    let mut sys = StandardSystem {
        poset: poset.clone(),
        projectives,
        delta,
        nabla,
        op_delta,
        hom,
        ext1: Vec::new(),
        proj_mult: Vec::new(),
    };
    sys.proj_mult = sys
        .projectives
        .iter()
        .map(|p| greedy_filtration(alg, &sys.poset, &sys.delta, p).ok().map(|f| f.counts))
        .collect();
    Ok(sys)
}

/// `Δ_i`, `∇_i` and the tables between them.
pub fn standard_modules(alg: &Algebra, poset: &WeightPoset) -> Result<StandardSystem> {
    let mut sys = basic_system(alg, poset)?;
    let res = resolve_all(alg, &sys.delta, 3, Execution::Parallel);
    let dg = DgEnd::new(alg, &res)?;
    let split = Splitting::new(&dg, SplitOrder::Forward);
    let table = ext_table(&dg, &split);
    let n = sys.len();
    sys.ext1 = (0..n).map(|i| (0..n).map(|j| table.get(1, i, j)).collect()).collect();
    Ok(sys)
}

#[derive(Clone, Debug)]
pub struct QhVerdict {
    pub quasi_hereditary: bool,
    pub end_dims: Vec<usize>,
    /// Greedy standard filtration found for each `P_i`.
    pub filtered: Vec<bool>,
    /// `dimvec P_i = Σ_j [∇_j : L_i] dimvec Δ_j` for every `i`.
    pub reciprocity: bool,
    pub diagnosis: Vec<String>,
}

impl QhVerdict {
    /// The two membership tests for `A ∈ F(Δ)` give the same answer.
    /// Reciprocity presumes scalar endomorphisms, so only then is the
    /// comparison meaningful.
    pub fn tests_agree(&self) -> bool {
        self.end_dims.iter().any(|&d| d != 1) || self.filtered.iter().all(|&b| b) == self.reciprocity
    }
}

pub fn is_quasi_hereditary(alg: &Algebra, sys: &StandardSystem) -> QhVerdict {
    let n = sys.len();
    let end_dims: Vec<usize> = (0..n).map(|i| sys.hom[i][i]).collect();
    let filtered: Vec<bool> = sys.proj_mult.iter().map(|m| m.is_some()).collect();
    let mut reciprocity = true;
    for i in 0..n {
        let mut sum = vec![0usize; n];
        for j in 0..n {
            let c = sys.nabla_mult(j, i);
            for (s, d) in sum.iter_mut().zip(sys.delta[j].dims()) {
                *s += c * d;
            }
        }
        if sum != sys.projectives[i].dims() {
            reciprocity = false;
        }
    }
    let mut diagnosis = Vec::new();
    for (i, &d) in end_dims.iter().enumerate() {
        if d != 1 {
            diagnosis.push(format!("End(Delta_{}) has dimension {d}", alg.quiver().vertices()[i]));
        }
    }
    for (i, &ok) in filtered.iter().enumerate() {
        if !ok {
            diagnosis.push(format!("P_{} has no standard filtration", alg.quiver().vertices()[i]));
        }
    }
    if !reciprocity {
        diagnosis.push("reciprocity fails".into());
    }
    QhVerdict {
        quasi_hereditary: diagnosis.is_empty(),
        end_dims,
        filtered,
        reciprocity,
        diagnosis,
    }
}

