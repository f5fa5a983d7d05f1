//! Conde's multiplicities and regularity criterion.

use super::filtration::nabla_filtration;
use super::standard::{is_quasi_hereditary, StandardSystem};
use crate::algebra::Algebra;
use crate::error::{Error, Result};

fn require_qh(alg: &Algebra, sys: &StandardSystem) -> Result<()> {
    let v = is_quasi_hereditary(alg, sys);
    if v.quasi_hereditary {
        Ok(())
    } else {
        Err(Error::NotQuasiHereditary(v.diagnosis.join("; ")))
    }
}

/// `ℓ_i = 1 + Σ_{k ≤ j < i} ℓ_k [∇_j : L_k] dim Hom(Δ_j, Δ_i) - Σ_{j < i} ℓ_j [Δ_i : L_j]`,
/// evaluated along a linear extension.
pub fn conde_multiplicities(alg: &Algebra, sys: &StandardSystem) -> Result<Vec<i64>> {
    require_qh(alg, sys)?;
    Ok(conde_along(sys, &sys.poset.linear_extension()))
}

/// The multiplicities computed along a given linear extension of the order.
pub fn conde_along(sys: &StandardSystem, order: &[usize]) -> Vec<i64> {
    let p = &sys.poset;
    let n = sys.len();
    let mut l = vec![0i64; n];
    for &i in order {
        let mut v = 1i64;
        for j in 0..n {
            if !p.lt(j, i) {
                continue;
            }
            let h = sys.hom[j][i] as i64;
            for k in 0..n {
                if p.le(k, j) {
                    v += l[k] * sys.nabla_mult(j, k) as i64 * h;
                }
            }
            v -= l[j] * sys.delta_mult(i, j) as i64;
        }
        l[i] = v;
    }
    l
}

/// Whether every `rad Δ_i` has a costandard filtration.
pub fn conde_criterion(alg: &Algebra, sys: &StandardSystem) -> Result<bool> {
    require_qh(alg, sys)?;
    for d in &sys.delta {
        let rad = d.radical(alg);
        let (r, _) = d.submodule(alg, &rad);
        if nabla_filtration(alg, sys, &r).is_err() {
            return Ok(false);
        }
    }
    Ok(true)
}
