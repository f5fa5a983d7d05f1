//! Conde multiplicities of a bare poset under the all-ones assumption
//! (`Hom(Δ_x, Δ_w)` one-dimensional iff `x ≤ w`, all multiplicities 1).

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A finite poset with named, height-labelled elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    pub names: Vec<String>,
    pub heights: Vec<usize>,
    less: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Builds the order generated by the covers `(v, w)`, meaning `v < w`.
    pub fn new(names: Vec<String>, heights: Vec<usize>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut seen = HashMap::new();
        for (k, name) in names.iter().enumerate() {
            if seen.insert(name.clone(), k).is_some() {
                return Err(Error::InvalidPoset(format!("duplicate element `{name}`")));
            }
        }
        let mut less = vec![vec![false; n]; n];
        for &(v, w) in covers {
            less[v][w] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        if (0..n).any(|i| less[i][i]) {
            return Err(Error::InvalidPoset("cover relation has a cycle".into()));
        }
        Ok(FinitePoset { names, heights, less })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    pub fn is_minimal(&self, a: usize) -> bool {
        (0..self.len()).all(|b| !self.less[b][a])
    }
}

/// `ℓ_x = 1 + Σ_{v < w < x} ℓ_v`, summed over pairs `(v, w)`.
pub fn conde_poset(p: &FinitePoset) -> Vec<u64> {
    let n = p.len();
    // Elements with fewer predecessors first; any linear extension works.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| p.lt(y, x)).count());
    let mut l = vec![0u64; n];
    for &x in &order {
        let mut v = 1u64;
        for w in 0..n {
            if !p.lt(w, x) {
                continue;
            }
            for u in 0..n {
                if p.lt(u, w) {
                    v += l[u];
                }
            }
        }
        l[x] = v;
    }
    l
}

/// Bruhat order of the dihedral group of order `2m`: ranks `0..=m`, two
/// elements in each intermediate rank, and `u < w` iff `rank u < rank w`.
pub fn dihedral_bruhat(m: usize) -> FinitePoset {
    let mut names = Vec::new();
    let mut heights = Vec::new();
    let word = |first: char, len: usize| -> String {
        let other = if first == 's' { 't' } else { 's' };
        (0..len).map(|k| if k % 2 == 0 { first } else { other }).collect()
    };
    for r in 0..=m {
        if r == 0 {
            names.push("e".to_string());
            heights.push(0);
        } else if r == m {
            names.push(word('s', m));
            heights.push(m);
        } else {
            names.push(word('s', r));
            heights.push(r);
            names.push(word('t', r));
            heights.push(r);
        }
    }
    let mut covers = Vec::new();
    for a in 0..names.len() {
        for b in 0..names.len() {
            if heights[b] == heights[a] + 1 {
                covers.push((a, b));
            }
        }
    }
    FinitePoset::new(names, heights, &covers).expect("graded by rank")
}
