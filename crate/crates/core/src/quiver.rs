//! Quivers, paths and relations.
//!
//! Paths are stored in application order (first arrow first) and printed
//! right-to-left, so the path "first `a`, then `b`" displays as `b*a`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        Ok(Quiver { vertices, arrows: Vec::new() })
    }

    /// Convenience constructor with vertices named `1..=n`.
    pub fn with_vertices(n: usize) -> Self {
        Quiver { vertices: (1..=n).map(|i| i.to_string()).collect(), arrows: Vec::new() }
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<usize> {
        if self.arrows.iter().any(|a| a.name == name) {
            return Err(Error::InvalidQuiver(format!("duplicate arrow `{name}`")));
        }
        let source = self.vertex(source)?;
        let target = self.vertex(target)?;
        self.arrows.push(Arrow { name: name.to_string(), source, target });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_id(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    /// Number of arrows `i -> j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == i && a.target == j).count()
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
            .collect();
        Quiver { vertices: self.vertices.clone(), arrows }
    }

    /// All paths of length exactly `len`, in path order.
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        let mut layer: Vec<Path> =
            (0..self.num_vertices()).map(Path::trivial).collect();
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &layer {
                for (id, a) in self.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut q = p.clone();
                        q.arrows.push(id);
                        q.target = a.target;
                        next.push(q);
                    }
                }
            }
            layer = next;
        }
        layer.sort();
        layer
    }

    /// Whether the underlying graph has an oriented cycle.
    pub fn has_oriented_cycle(&self) -> bool {
        let n = self.num_vertices();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen < n
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e{}", self.vertices[p.source]);
        }
        let names: Vec<&str> =
            p.arrows.iter().rev().map(|&a| self.arrows[a].name.as_str()).collect();
        names.join("*")
    }
}

/// A path in a quiver. `arrows` lists arrow ids in application order; the
/// empty path at `v` is the idempotent `e_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        let ar = q.arrow(a);
        Path { source: ar.source, target: ar.target, arrows: vec![a] }
    }

    /// Builds a path from arrow ids given in application order.
    pub fn from_arrows(q: &Quiver, arrows: &[usize]) -> Option<Self> {
        let first = *arrows.first()?;
        let mut p = Path::arrow(q, first);
        for &a in &arrows[1..] {
            if q.arrow(a).source != p.target {
                return None;
            }
            p.arrows.push(a);
            p.target = q.arrow(a).target;
        }
        Some(p)
    }

    /// Number of arrows.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self * other`: first `other`, then `self`. `None` if not composable.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if other.target != self.source {
            return None;
        }
        let mut arrows = other.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path { source: other.source, target: self.target, arrows })
    }

    /// The same arrows read in the opposite quiver.
    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }
}

/// Path order: longer paths are larger; equal lengths compare by arrow ids
/// in application order; trivial paths compare by vertex.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Path)>) -> Self {
        Relation { terms }
    }

    pub fn source(&self) -> Option<usize> {
        self.terms.first().map(|t| t.1.source)
    }
    pub fn target(&self) -> Option<usize> {
        self.terms.first().map(|t| t.1.target)
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|t| t.1.len()).min().unwrap_or(0)
    }
    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|t| t.1.len()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.min_len() == self.max_len()
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (c, p)) in self.terms.iter().enumerate() {
            let (n, _) = c.parts();
            let neg = n < 0;
            let abs = if neg { -*c } else { *c };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs} "));
            }
            out.push_str(&q.path_name(p));
        }
        out
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            write!(f, "e[{}]", self.source)
        } else {
            let ids: Vec<String> = self.arrows.iter().rev().map(|a| a.to_string()).collect();
            write!(f, "{}", ids.join("*"))
        }
    }
}
