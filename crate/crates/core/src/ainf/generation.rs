//! Generation of the Ext algebra by low degrees, and vanishing of higher
//! products on degree-one classes.

use super::{AInfinity, SparseVec};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Reducer;

#[derive(Clone, Debug)]
pub struct GenerationReport {
    pub generated: bool,
    /// Basis elements of positive known degree outside the closure.
    pub uncovered: Vec<usize>,
    /// Spanning vectors of the closure, as `(degree, dense coordinates)`.
    pub closure: Vec<(i64, Vec<Scalar>)>,
    /// Products that could not be evaluated because of truncation.
    pub unknown: usize,
}

#[derive(Clone, Debug)]
pub struct VanishingReport {
    pub holds: bool,
    /// A tuple of degree-one classes with `m_n ≠ 0`, `n ≠ 2`.
    pub witness: Option<(Vec<usize>, SparseVec)>,
}

struct Span {
    degree: i64,
    src: usize,
    tgt: usize,
    terms: SparseVec,
}

/// Closes the degree-one classes (and degree-zero ones when
/// `with_degree_zero`) under every `m_n` with `2 <= n <= arity_bound`.
pub fn check_degree_one_generation(a: &AInfinity, with_degree_zero: bool) -> GenerationReport {
    let dim = a.basis.len();
    let f = a.field;
    let mut red = Reducer::new(f, dim);
    let mut spans: Vec<Span> = Vec::new();
    for (g, gen) in a.basis.iter().enumerate() {
        if gen.degree == 1 || (with_degree_zero && gen.degree == 0) {
            let mut v = vec![f.zero(); dim];
            v[g] = f.one();
            red.insert(&v);
            spans.push(Span { degree: gen.degree, src: gen.src, tgt: gen.tgt, terms: vec![(g, f.one())] });
        }
    }
    let max_deg = a.basis.iter().map(|g| g.degree).filter(|&d| a.known(d)).max().unwrap_or(0);
    let mut unknown = 0;
    loop {
        let mut added = false;
        for n in 2..=a.arity_bound {
            let min_deg = spans.iter().map(|s| s.degree).min().unwrap_or(0);
            let mut tuples = Vec::new();
            span_tuples(&spans, n, max_deg + n as i64 - 2, min_deg, &mut Vec::new(), 0, &mut tuples);
            for t in tuples {
                let Some(v) = evaluate(a, &spans, &t) else {
                    unknown += 1;
                    continue;
                };
                if v.is_empty() {
                    continue;
                }
                let mut dense = vec![f.zero(); dim];
                for &(k, c) in &v {
                    dense[k] = c;
                }
                if red.insert(&dense) {
                    let first = &a.basis[v[0].0];
                    spans.push(Span { degree: first.degree, src: first.src, tgt: first.tgt, terms: v });
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut uncovered = Vec::new();
    for (g, gen) in a.basis.iter().enumerate() {
        if gen.degree >= 1 && a.known(gen.degree) {
            let mut v = vec![f.zero(); dim];
            v[g] = f.one();
            if !red.contains(&v) {
                uncovered.push(g);
                red.insert(&v);
            }
        }
    }
    let closure = spans
        .iter()
        .map(|s| {
            let mut v = vec![f.zero(); dim];
            for &(k, c) in &s.terms {
                v[k] = c;
            }
            (s.degree, v)
        })
        .collect();
    GenerationReport { generated: uncovered.is_empty(), uncovered, closure, unknown }
}

fn span_tuples(
    spans: &[Span],
    n: usize,
    max_sum: i64,
    min_deg: i64,
    stack: &mut Vec<usize>,
    sum: i64,
    out: &mut Vec<Vec<usize>>,
) {
    if stack.len() == n {
        out.push(stack.clone());
        return;
    }
    let rest = (n - stack.len() - 1) as i64;
    for (k, s) in spans.iter().enumerate() {
        if let Some(&last) = stack.last() {
            if spans[last].src != s.tgt {
                continue;
            }
        }
        if sum + s.degree + rest * min_deg > max_sum {
            continue;
        }
        stack.push(k);
        span_tuples(spans, n, max_sum, min_deg, stack, sum + s.degree, out);
        stack.pop();
    }
}

/// `m_n` on a tuple of spanning vectors, expanded multilinearly.
fn evaluate(a: &AInfinity, spans: &[Span], t: &[usize]) -> Option<SparseVec> {
    let mut acc = std::collections::HashMap::new();
    let mut idx = vec![0usize; t.len()];
    loop {
        let tuple: Vec<usize> = idx.iter().zip(t).map(|(&i, &s)| spans[s].terms[i].0).collect();
        let c = idx
            .iter()
            .zip(t)
            .fold(Scalar::from(1), |c, (&i, &s)| c * spans[s].terms[i].1);
        let v = a.m(&tuple)?;
        super::accumulate(&mut acc, c, &v);
        let mut pos = t.len();
        loop {
            if pos == 0 {
                return Some(super::to_sparse(acc));
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < spans[t[pos]].terms.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Checks that `m_n` vanishes on tuples of degree-one classes for every
/// `n ≠ 2` up to the arity bound. Requires an internal grading.
pub fn quadratic_vanishing_check(a: &AInfinity) -> Result<VanishingReport> {
    if a.basis.iter().any(|g| g.internal.is_none()) {
        return Err(Error::NoInternalGrading);
    }
    for n in 3..=a.arity_bound {
        for t in a.tuples_in_degree(n, 1) {
            match a.m(&t) {
                Some(v) if v.is_empty() => {}
                Some(v) => return Ok(VanishingReport { holds: false, witness: Some((t, v)) }),
                None => {}
            }
        }
    }
    Ok(VanishingReport { holds: true, witness: None })
}
