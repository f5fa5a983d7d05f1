//! Merkulov's construction of the minimal model.
//!
//! With `hλ_1 = id`,
//! `λ_n(a_1..a_n) = Σ_{r+s=n} (-1)^{r-1} (hλ_r ⊗ hλ_s)(a_1..a_n)` composed,
//! where the Koszul rule contributes `(-1)^{|hλ_s| (|a_1|+...+|a_r|)}` and
//! `|hλ_s| = 1 - s`. Then `m_n = p λ_n i^{⊗n}`.

use std::collections::HashMap;

use super::{AInfinity, Generator, SparseVec};
use crate::dg::{DgElem, DgEnd};
use crate::error::Result;
use crate::ext::{SplitOrder, Splitting};

#[derive(Clone, Debug)]
pub enum SplittingPolicy {
    Deterministic(SplitOrder),
    Provided(Box<Splitting>),
}

impl Default for SplittingPolicy {
    fn default() -> Self {
        SplittingPolicy::Deterministic(SplitOrder::Forward)
    }
}

/// Memoized evaluator of `λ_n` and `m_n` on basis tuples.
pub struct MerkulovEngine<'a> {
    dg: &'a DgEnd,
    split: Splitting,
    basis: Vec<Generator>,
    // Global generator -> (degree, index in the degree's harmonic basis).
    place: Vec<(i64, usize)>,
    // (degree, harmonic index) -> global generator.
    global: HashMap<(i64, usize), usize>,
    incl: Vec<DgElem>,
    limit: Option<i64>,
    memo_lambda: HashMap<Vec<usize>, DgElem>,
    memo_h: HashMap<Vec<usize>, DgElem>,
}

impl<'a> MerkulovEngine<'a> {
    pub fn new(dg: &'a DgEnd, policy: SplittingPolicy) -> Result<Self> {
        let split = match policy {
            SplittingPolicy::Deterministic(order) => Splitting::new(dg, order),
            SplittingPolicy::Provided(s) => {
                s.validate(dg)?;
                *s
            }
        };
        let (degrees, limit): (Vec<i64>, Option<i64>) = if dg.complete() {
            ((-dg.window()..=dg.window()).collect(), None)
        } else {
            let honest: Vec<i64> = (1..=dg.window()).filter(|&n| dg.honest(n)).collect();
            let lim = honest.last().map_or(1, |&n| n + 1);
            (honest, Some(lim))
        };
        let mut basis = Vec::new();
        let mut place = Vec::new();
        let mut global = HashMap::new();
        let mut incl = Vec::new();
        for n in degrees {
            for (k, e) in split.ext_basis(n).iter().enumerate() {
                global.insert((n, k), basis.len());
                place.push((n, k));
                basis.push(Generator { degree: n, src: e.src, tgt: e.tgt, internal: e.internal });
                incl.push(split.include(dg, n, k));
            }
        }
        Ok(MerkulovEngine {
            dg,
            split,
            basis,
            place,
            global,
            incl,
            limit,
            memo_lambda: HashMap::new(),
            memo_h: HashMap::new(),
        })
    }

    pub fn basis(&self) -> &[Generator] {
        &self.basis
    }

    pub fn splitting(&self) -> &Splitting {
        &self.split
    }

    pub fn limit(&self) -> Option<i64> {
        self.limit
    }

    fn degree_sum(&self, t: &[usize]) -> i64 {
        t.iter().map(|&a| self.basis[a].degree).sum()
    }

    /// `λ_n` on a basis tuple (n ≥ 2), as an element of `End`.
    pub fn lambda(&mut self, t: &[usize]) -> DgElem {
        if let Some(v) = self.memo_lambda.get(t) {
            return v.clone();
        }
        let n = t.len();
        let deg = self.degree_sum(t) + 2 - n as i64;
        let mut out = self.dg.zero(deg);
        for r in 1..n {
            let s = n - r;
            let left = self.h_lambda(&t[..r]);
            let right = self.h_lambda(&t[r..]);
            if left.iter().all(|x| x.is_zero()) || right.iter().all(|x| x.is_zero()) {
                continue;
            }
            let dl = self.degree_sum(&t[..r]) + 1 - r as i64;
            let dr = self.degree_sum(&t[r..]) + 1 - s as i64;
            let e = (r as i64 - 1) + (1 - s as i64) * self.degree_sum(&t[..r]);
            let sgn = super::sign(e);
            let prod = self.dg.compose(dl, &left, dr, &right);
            for (o, p) in out.iter_mut().zip(prod) {
                if !p.is_zero() {
                    *o += sgn * p;
                }
            }
        }
        self.memo_lambda.insert(t.to_vec(), out.clone());
        out
    }

    /// `hλ_n`, with `hλ_1 = i`.
    pub fn h_lambda(&mut self, t: &[usize]) -> DgElem {
        if t.len() == 1 {
            return self.incl[t[0]].clone();
        }
        if let Some(v) = self.memo_h.get(t) {
            return v.clone();
        }
        let lam = self.lambda(t);
        let deg = self.degree_sum(t) + 2 - t.len() as i64;
        let h = self.split.homotopy(self.dg, deg, &lam);
        self.memo_h.insert(t.to_vec(), h.clone());
        h
    }

    /// `m_n = p λ_n` on a composable basis tuple.
    pub fn m(&mut self, t: &[usize]) -> SparseVec {
        let lam = self.lambda(t);
        let deg = self.degree_sum(t) + 2 - t.len() as i64;
        let coords = self.split.project(deg, &lam);
        coords
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.global[&(deg, k)], c))
            .collect()
    }

    /// Evaluates `m_n` on every composable tuple of arity `2..=arity_bound`
    /// that passes `keep`, and whose output degree is known and occupied.
    pub fn fill(&mut self, arity_bound: usize, keep: impl Fn(&[Generator], &[usize]) -> bool) -> AInfinity {
        let mut tables = vec![HashMap::new(); arity_bound + 1];
        let max_out = self
            .basis
            .iter()
            .map(|g| g.degree)
            .filter(|&d| self.limit.is_none_or(|l| d < l))
            .max();
        let occupied: std::collections::HashSet<i64> = self.basis.iter().map(|g| g.degree).collect();
        let min_deg = self.basis.iter().map(|g| g.degree).min().unwrap_or(0);
        if let Some(max_out) = max_out {
            let mut by_tgt: HashMap<usize, Vec<usize>> = HashMap::new();
            for (k, g) in self.basis.iter().enumerate() {
                by_tgt.entry(g.tgt).or_default().push(k);
            }
            for n in 2..=arity_bound {
                let bound = max_out + n as i64 - 2;
                let mut tuples = Vec::new();
                let mut stack: Vec<usize> = Vec::new();
                enumerate(&self.basis, &by_tgt, n, bound, min_deg, &mut stack, 0, &mut tuples);
                for t in tuples {
                    let d = self.degree_sum(&t) + 2 - n as i64;
                    if !occupied.contains(&d) || self.limit.is_some_and(|l| d >= l) {
                        continue;
                    }
                    if !keep(&self.basis, &t) {
                        continue;
                    }
                    let v = self.m(&t);
                    tables[n].insert(t, v);
                }
            }
        }
        AInfinity {
            field: self.dg.algebra().field(),
            num_blocks: self.dg.num_blocks(),
            basis: self.basis.clone(),
            arity_bound,
            limit: self.limit,
            tables,
        }
    }

    /// The generator index of harmonic element `k` in degree `n`.
    pub fn generator(&self, n: i64, k: usize) -> Option<usize> {
        self.global.get(&(n, k)).copied()
    }

    pub fn place(&self, g: usize) -> (i64, usize) {
        self.place[g]
    }
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    basis: &[Generator],
    by_tgt: &HashMap<usize, Vec<usize>>,
    n: usize,
    bound: i64,
    min_deg: i64,
    stack: &mut Vec<usize>,
    sum: i64,
    out: &mut Vec<Vec<usize>>,
) {
    if stack.len() == n {
        out.push(stack.clone());
        return;
    }
    let remaining = (n - stack.len() - 1) as i64;
    let cands: Vec<usize> = match stack.last() {
        None => (0..basis.len()).collect(),
        Some(&a) => by_tgt.get(&basis[a].src).cloned().unwrap_or_default(),
    };
    for c in cands {
        let s = sum + basis[c].degree;
        if s + remaining * min_deg > bound {
            continue;
        }
        stack.push(c);
        enumerate(basis, by_tgt, n, bound, min_deg, stack, s, out);
        stack.pop();
    }
}

/// Minimal model of `dg` with `m_n` tabulated up to `arity_bound`.
pub fn merkulov(dg: &DgEnd, arity_bound: usize, policy: SplittingPolicy) -> Result<AInfinity> {
    let mut eng = MerkulovEngine::new(dg, policy)?;
    Ok(eng.fill(arity_bound, |_, _| true))
}
