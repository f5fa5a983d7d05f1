//! The essential order, generated two ways.

use super::standard::{is_quasi_hereditary, StandardSystem};
use super::WeightPoset;
use crate::algebra::Algebra;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct EssentialOrder {
    /// Closure of `i < j` when `[Δ_j : L_i] ≠ 0` or `(P_i : Δ_j) ≠ 0`.
    pub by_multiplicities: WeightPoset,
    /// Closure of `i < j` when `Hom(Δ_i, Δ_j) ≠ 0` or `Ext¹(Δ_i, Δ_j) ≠ 0`.
    pub by_hom_ext: WeightPoset,
}

impl EssentialOrder {
    pub fn agree(&self) -> bool {
        self.by_multiplicities == self.by_hom_ext
    }
}

pub fn essential_order(alg: &Algebra, sys: &StandardSystem) -> Result<EssentialOrder> {
    let v = is_quasi_hereditary(alg, sys);
    if !v.quasi_hereditary {
        return Err(Error::NotQuasiHereditary(v.diagnosis.join("; ")));
    }
    if sys.ext1.is_empty() {
        return Err(Error::NotQuasiHereditary("Ext¹ table between standards missing".into()));
    }
    let n = sys.len();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for i in 0..n {
        let pm = sys.proj_mult[i].as_ref().expect("filtered");
        for j in 0..n {
            if i == j {
                continue;
            }
            if sys.delta_mult(j, i) != 0 || pm[j] != 0 {
                a.push((i, j));
            }
            if sys.hom[i][j] != 0 || sys.ext1[i][j] != 0 {
                b.push((i, j));
            }
        }
    }
    Ok(EssentialOrder {
        by_multiplicities: WeightPoset::from_relations(n, &a)?,
        by_hom_ext: WeightPoset::from_relations(n, &b)?,
    })
}
