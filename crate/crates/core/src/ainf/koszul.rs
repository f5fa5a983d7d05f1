//! Rebuilding an algebra from the A-infinity structure on the Ext algebra
//! of its simples: arrows dual to `Ext¹`, one relation per basis vector of
//! `Ext²`, read off from the `m_n` on tuples of degree-one classes.

use super::AInfinity;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::quiver::{Path, Quiver, Relation};

/// Quiver and relations before the algebra is built.
#[derive(Clone, Debug)]
pub struct PresentationSketch {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Generator index (in the A-infinity basis) behind each arrow.
    pub arrow_generators: Vec<usize>,
    /// Generator index behind each relation, before zero relations were dropped.
    pub relation_generators: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub sketch: PresentationSketch,
    pub algebra: Algebra,
}

/// Convention: a class `x` in block `i -> j` becomes an arrow `i -> j`, and
/// the tuple `(a_1, ..., a_n)` becomes the path `a_1 * ... * a_n` (so
/// `a_n` is traversed first). The relation attached to `η ∈ Ext²` is
/// `Σ_n Σ_tuples ⟨η^*, m_n(a_1..a_n)⟩ a_1 * ... * a_n`.
pub fn koszul_reconstruct(a: &AInfinity, field: Field) -> Result<Reconstruction> {
    reconstruct_signed(a, field, &|_| Scalar::from(1))
}

/// As [`koszul_reconstruct`], with the coefficient of each tuple multiplied
/// by `sign(tuple)`.
pub(crate) fn reconstruct_signed(
    a: &AInfinity,
    field: Field,
    sign: &dyn Fn(&[usize]) -> Scalar,
) -> Result<Reconstruction> {
    if !a.known(2) {
        return Err(Error::TruncationTooLow("Ext² is not available".into()));
    }
    let ones = a.of_degree(1);
    let twos = a.of_degree(2);
    let mut quiver = Quiver::with_vertices(a.num_blocks);
    let mut arrow_of = vec![usize::MAX; a.basis.len()];
    for (k, &g) in ones.iter().enumerate() {
        let gen = &a.basis[g];
        let (s, t) = (quiver.vertices()[gen.src].clone(), quiver.vertices()[gen.tgt].clone());
        arrow_of[g] = quiver.add_arrow(&format!("x{}", k + 1), &s, &t)?;
    }
    let mut terms: Vec<Vec<(Scalar, Path)>> = vec![Vec::new(); twos.len()];
    let slot = |g: usize| twos.iter().position(|&x| x == g);
    for n in 2..=a.arity_bound {
        for t in a.tuples_in_degree(n, 1) {
            let v = a
                .m(&t)
                .ok_or_else(|| Error::TruncationTooLow(format!("m_{n} on degree-one classes")))?;
            if v.is_empty() {
                continue;
            }
            let applied: Vec<usize> = t.iter().rev().map(|&g| arrow_of[g]).collect();
            let path = Path::from_arrows(&quiver, &applied).expect("composable tuple");
            let sg = sign(&t);
            for (g, c) in v {
                if let Some(r) = slot(g) {
                    terms[r].push((sg * c, path.clone()));
                }
            }
        }
    }
    let mut relations = Vec::new();
    let mut relation_generators = Vec::new();
    for (r, ts) in terms.into_iter().enumerate() {
        if !ts.is_empty() {
            relations.push(Relation::new(ts));
            relation_generators.push(twos[r]);
        }
    }
    let arrow_generators = ones.clone();
    let max_nil = a.arity_bound.max(2) + 1;
    let algebra = Algebra::build(quiver.clone(), relations.clone(), field, max_nil).map_err(|e| match e {
        Error::InfiniteDimensional(_) => Error::ReconstructionInfinite(a.arity_bound),
        other => other,
    })?;
    Ok(Reconstruction {
        sketch: PresentationSketch { quiver, relations, arrow_generators, relation_generators },
        algebra,
    })
}
