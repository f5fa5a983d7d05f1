//! Shortcuts chaining resolutions, the dg endomorphism algebra and the
//! minimal model.

use crate::ainf::{merkulov, AInfinity, SplittingPolicy};
use crate::algebra::Algebra;
use crate::dg::DgEnd;
use crate::error::Result;
use crate::module::Module;
use crate::par::Execution;
use crate::resolution::resolve_all;

/// Default truncation degree for resolutions that do not terminate.
pub const DEFAULT_TRUNCATION: usize = 7;

/// Default arity bound: nilpotency + 1, capped at 8.
pub fn default_arity(alg: &Algebra) -> usize {
    (alg.nilpotency() + 1).clamp(2, 8)
}

/// `End` of the direct sum of minimal resolutions of `modules`.
pub fn dg_of(alg: &Algebra, modules: &[Module], truncation: usize, exec: Execution) -> Result<DgEnd> {
    let res = resolve_all(alg, modules, truncation, exec);
    DgEnd::new(alg, &res)
}

pub fn simples(alg: &Algebra) -> Result<Vec<Module>> {
    (0..alg.num_vertices()).map(|i| Module::simple(alg, i)).collect()
}

/// Minimal model of the Ext algebra of the simples.
pub fn simples_model(
    alg: &Algebra,
    truncation: usize,
    arity: usize,
    policy: SplittingPolicy,
    exec: Execution,
) -> Result<(DgEnd, AInfinity)> {
    let dg = dg_of(alg, &simples(alg)?, truncation, exec)?;
    let a = merkulov(&dg, arity, policy)?;
    Ok((dg, a))
}
