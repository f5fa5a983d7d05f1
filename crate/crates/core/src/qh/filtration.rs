//! Greedy standard filtrations.
//!
//! Standard modules of larger weight sit at the bottom: with `i` the last
//! vertex (in a linear extension) in the support of `M`, the submodule
//! generated by `M_i` must be `Δ_i^m`, `m = dim M_i`. Peel it off and
//! continue with the quotient.

use super::standard::StandardSystem;
use super::WeightPoset;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::module::{unit, Module, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    /// Layers from the bottom: `(i, m)` means a subquotient `Δ_i^m`.
    pub layers: Vec<(usize, usize)>,
    /// `counts[i]` = number of `Δ_i` factors.
    pub counts: Vec<usize>,
}

impl Filtration {
    /// Subquotient labels from the bottom, one per factor.
    pub fn factors(&self) -> Vec<usize> {
        self.layers.iter().flat_map(|&(i, m)| std::iter::repeat_n(i, m)).collect()
    }
}

pub(crate) fn greedy_filtration(
    alg: &Algebra,
    poset: &WeightPoset,
    deltas: &[Module],
    m: &Module,
) -> Result<Filtration> {
    let n = alg.num_vertices();
    let f = alg.field();
    let order = poset.linear_extension();
    let mut cur = m.clone();
    let mut layers = Vec::new();
    let mut counts = vec![0; n];
    let mut stage = 0;
    while !cur.is_zero() {
        let i = *order.iter().rev().find(|&&v| cur.dims()[v] > 0).expect("nonzero module");
        let d = cur.dims()[i];
        let mut vectors = vec![Vec::new(); n];
        vectors[i] = (0..d).map(|k| unit(f, d, k)).collect();
        let sub = cur.generate(alg, &Subspace { vectors });
        let dims = sub.dims();
        let expect: Vec<usize> = deltas[i].dims().iter().map(|&x| x * d).collect();
        if dims != expect {
            return Err(Error::NotFiltered { stage });
        }
        layers.push((i, d));
        counts[i] += d;
        cur = cur.quotient(alg, &sub).0;
        stage += 1;
    }
    Ok(Filtration { layers, counts })
}

/// A standard filtration of `m`, or the stage at which none exists.
pub fn delta_filtration(alg: &Algebra, sys: &StandardSystem, m: &Module) -> Result<Filtration> {
    greedy_filtration(alg, &sys.poset, &sys.delta, m)
}

/// A costandard filtration of `m`, found as a standard filtration of the
/// dual over the opposite algebra. Layers are listed from the top of `m`.
pub fn nabla_filtration(alg: &Algebra, sys: &StandardSystem, m: &Module) -> Result<Filtration> {
    greedy_filtration(&alg.opposite(), &sys.poset, &sys.op_delta, &m.dualize())
}
