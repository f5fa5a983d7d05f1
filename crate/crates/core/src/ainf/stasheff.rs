//! Verification of the A-infinity relations
//! `Σ (-1)^{r+st} m_{r+1+t}(1^r ⊗ m_s ⊗ 1^t) = 0` with `m_1 = 0`.

use std::collections::HashMap;

use super::{accumulate, sign, to_sparse, AInfinity, SparseVec};
use crate::field::Scalar;
use crate::par::{self, Execution};

#[derive(Clone, Debug, Default)]
pub struct StasheffReport {
    /// Tuples on which the relation was evaluated, per arity.
    pub checked: Vec<usize>,
    /// Tuples skipped because some term was unknown.
    pub skipped: usize,
    /// Tuples with a nonzero left-hand side and its value.
    pub failures: Vec<(Vec<usize>, SparseVec)>,
}

impl StasheffReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_checked(&self) -> usize {
        self.checked.iter().sum()
    }
}

enum Outcome {
    Zero,
    Unknown,
    Nonzero(SparseVec),
}

/// Left-hand side of the relation of arity `tuple.len()`, or `None` if a
/// term is unknown.
pub fn stasheff_lhs(a: &AInfinity, tuple: &[usize]) -> Option<SparseVec> {
    let n = tuple.len();
    let mut acc: HashMap<usize, Scalar> = HashMap::new();
    for s in 2..n {
        for r in 0..=n - s {
            let t = n - r - s;
            let inner = a.m(&tuple[r..r + s])?;
            if inner.is_empty() {
                continue;
            }
            let pre: i64 = tuple[..r].iter().map(|&x| a.basis[x].degree).sum();
            let e = r as i64 + (s * t) as i64 + (2 - s as i64) * pre;
            let sg = sign(e);
            let mut outer = Vec::with_capacity(r + 1 + t);
            outer.extend_from_slice(&tuple[..r]);
            outer.push(0);
            outer.extend_from_slice(&tuple[r + s..]);
            for &(b, c) in &inner {
                outer[r] = b;
                let v = a.m(&outer)?;
                accumulate(&mut acc, sg * c, &v);
            }
        }
    }
    Some(to_sparse(acc))
}

/// Checks the relations of arity `3..=max_arity` on every composable basis
/// tuple whose output degree is known.
pub fn check_stasheff(a: &AInfinity, max_arity: usize, exec: Execution) -> StasheffReport {
    let max_out = a.basis.iter().map(|g| g.degree).filter(|&d| a.known(d)).max();
    let mut report = StasheffReport { checked: vec![0; max_arity + 1], ..Default::default() };
    let Some(max_out) = max_out else {
        return report;
    };
    for n in 3..=max_arity {
        // Output degree of the relation is Σ|a_i| + 3 - n.
        let tuples = a.tuples(n, max_out + n as i64 - 3);
        let outcomes = par::map(exec, &tuples, |t| match stasheff_lhs(a, t) {
            None => Outcome::Unknown,
            Some(v) if v.is_empty() => Outcome::Zero,
            Some(v) => Outcome::Nonzero(v),
        });
        for (t, o) in tuples.into_iter().zip(outcomes) {
            match o {
                Outcome::Zero => report.checked[n] += 1,
                Outcome::Unknown => report.skipped += 1,
                Outcome::Nonzero(v) => {
                    report.checked[n] += 1;
                    report.failures.push((t, v));
                }
            }
        }
    }
    report
}
