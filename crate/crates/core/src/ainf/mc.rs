//! Maurer-Cartan obstruction of a strictly upper triangular matrix of
//! degree-one classes.

use std::collections::HashMap;

use super::{accumulate, sign, to_sparse, AInfinity, SparseVec};
use crate::error::{Error, Result};
use crate::field::Scalar;

/// Strictly upper triangular `size × size` matrix over `Ext¹`.
///
/// Entry `(a, b)` (with `a < b`) lies in the block `types[b] -> types[a]`,
/// so that matrix products compose as `m_2(x_{ab}, x_{bc})`.
#[derive(Clone, Debug)]
pub struct McElement {
    pub types: Vec<usize>,
    pub entries: HashMap<(usize, usize), SparseVec>,
}

impl McElement {
    pub fn new(types: Vec<usize>) -> Self {
        McElement { types, entries: HashMap::new() }
    }

    pub fn size(&self) -> usize {
        self.types.len()
    }

    pub fn set(&mut self, a: usize, b: usize, v: SparseVec) {
        self.entries.insert((a, b), v);
    }

    fn get(&self, a: usize, b: usize) -> &[(usize, Scalar)] {
        self.entries.get(&(a, b)).map_or(&[], |v| v.as_slice())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Obstruction {
    /// Nonzero entries of `Σ_t (-1)^{t(t-1)/2} m_t(x^{⊗t})`.
    pub entries: Vec<((usize, usize), SparseVec)>,
    /// Entries with a contribution that could not be evaluated.
    pub unknown: Vec<(usize, usize)>,
}

impl Obstruction {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty() && self.unknown.is_empty()
    }
}

/// The Maurer-Cartan sum of `x`; zero iff the encoded iterated extension
/// exists (up to the known range).
pub fn maurer_cartan_check(a: &AInfinity, x: &McElement) -> Result<Obstruction> {
    let s = x.size();
    for (&(i, j), v) in &x.entries {
        if i >= j || j >= s {
            return Err(Error::BlockMismatch(i, j));
        }
        for &(g, _) in v {
            let gen = a.basis.get(g).ok_or(Error::BlockMismatch(i, j))?;
            if gen.degree != 1 || gen.src != x.types[j] || gen.tgt != x.types[i] {
                return Err(Error::BlockMismatch(i, j));
            }
        }
    }
    let mut out = Obstruction::default();
    for i in 0..s {
        for j in i + 2..s {
            let mut acc = HashMap::new();
            let mut unknown = false;
            let mut chain = vec![i];
            chains(x, a, j, &mut chain, &mut acc, &mut unknown);
            let v = to_sparse(acc);
            if unknown {
                out.unknown.push((i, j));
            }
            if !v.is_empty() {
                out.entries.push(((i, j), v));
            }
        }
    }
    Ok(out)
}

/// Accumulates the terms for all chains `chain[0] < ... < end`.
fn chains(
    x: &McElement,
    a: &AInfinity,
    end: usize,
    chain: &mut Vec<usize>,
    acc: &mut HashMap<usize, Scalar>,
    unknown: &mut bool,
) {
    let last = *chain.last().unwrap();
    // Close the chain at `end`.
    if chain.len() >= 2 {
        chain.push(end);
        let t = chain.len() - 1;
        let sg = sign((t * (t - 1) / 2) as i64);
        let factors: Vec<&[(usize, Scalar)]> = chain.windows(2).map(|w| x.get(w[0], w[1])).collect();
        expand(a, &factors, sg, acc, unknown);
        chain.pop();
    }
    for b in last + 1..end {
        if x.get(last, b).is_empty() {
            continue;
        }
        chain.push(b);
        chains(x, a, end, chain, acc, unknown);
        chain.pop();
    }
}

fn expand(a: &AInfinity, factors: &[&[(usize, Scalar)]], sg: Scalar, acc: &mut HashMap<usize, Scalar>, unknown: &mut bool) {
    if factors.iter().any(|f| f.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; factors.len()];
    loop {
        let tuple: Vec<usize> = idx.iter().zip(factors).map(|(&i, f)| f[i].0).collect();
        let c = idx.iter().zip(factors).fold(sg, |c, (&i, f)| c * f[i].1);
        match a.m(&tuple) {
            Some(v) => accumulate(acc, c, &v),
            None => *unknown = true,
        }
        let mut pos = factors.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < factors[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}
