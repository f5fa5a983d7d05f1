//! Text formats for algebras (with an optional weight order) and for
//! finite posets. One declaration per line, `#` starts a comment.
//!
//! ```text
//! field Q
//! vertex 1 2 3
//! arrow a : 1 -> 2
//! arrow b : 2 -> 3
//! relation b*a
//! order 1 < 2, 1 < 3
//! ```
//!
//! Modules over a parsed algebra: `dim vertex n` and `action arrow rows`,
//! rows separated by `;`, each matrix of shape `dim target × dim source`.
//! A `module` line starts the next module of a list.
//!
//! ```text
//! module
//! dim 1 1
//! dim 2 1
//! action a 1
//! ```
//!
//! ```text
//! element e height 0
//! element s height 1
//! cover e < s
//! ```

use crate::algebra::{Algebra, DEFAULT_MAX_NILPOTENCY};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::module::Module;
use crate::qh::{FinitePoset, WeightPoset};
use crate::quiver::{Path, Quiver, Relation};

#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub algebra: Algebra,
    /// The `order` declarations, if any.
    pub order: Option<WeightPoset>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((k + 1, l))
    })
}

fn parse_field(line: usize, s: &str) -> Result<Field> {
    match s {
        "Q" => Ok(Field::Rationals),
        _ => {
            let p = s
                .strip_prefix('F')
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| err(line, format!("unknown field `{s}` (expected Q or Fp)")))?;
            Field::prime(p).map_err(|e| err(line, e.to_string()))
        }
    }
}

fn parse_coefficient(field: Field, line: usize, s: &str) -> Result<Option<Scalar>> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let (Ok(n), Ok(d)) = (num.parse::<i64>(), den.parse::<i64>()) else {
        return Ok(None);
    };
    field.from_ratio(n, d).map(Some).map_err(|e| err(line, e.to_string()))
}

/// A `*`-joined word of arrow names, read right to left.
fn parse_path(q: &Quiver, line: usize, word: &str) -> Result<Path> {
    let mut ids = Vec::new();
    for name in word.split('*') {
        let id = q.arrow_id(name).ok_or_else(|| err(line, format!("unknown arrow `{name}`")))?;
        ids.push(id);
    }
    ids.reverse();
    Path::from_arrows(q, &ids).ok_or_else(|| err(line, format!("`{word}` is not a path")))
}

fn parse_relation(q: &Quiver, field: Field, line: usize, body: &str) -> Result<Relation> {
    let mut terms = Vec::new();
    let mut sign = field.one();
    let mut coeff: Option<Scalar> = None;
    for tok in body.split_whitespace() {
        match tok {
            "+" => sign = field.one(),
            "-" => sign = -field.one(),
            _ => {
                if let Some(c) = parse_coefficient(field, line, tok)? {
                    if coeff.is_some() {
                        return Err(err(line, format!("two coefficients in a row at `{tok}`")));
                    }
                    coeff = Some(c);
                    continue;
                }
                let (word, s) = match tok.strip_prefix('-') {
                    Some(w) => (w, -sign),
                    None => (tok, sign),
                };
                let p = parse_path(q, line, word)?;
                terms.push((s * coeff.take().unwrap_or(field.one()), p));
                sign = field.one();
            }
        }
    }
    if coeff.is_some() || terms.is_empty() {
        return Err(err(line, "relation must end with a path"));
    }
    Ok(Relation::new(terms))
}

fn parse_order(q: &Quiver, line: usize, body: &str, pairs: &mut Vec<(usize, usize)>) -> Result<()> {
    for chain in body.split(',') {
        let names: Vec<&str> = chain.split('<').map(str::trim).collect();
        if names.len() < 2 || names.iter().any(|n| n.is_empty()) {
            return Err(err(line, format!("expected `v < w`, found `{}`", chain.trim())));
        }
        let ids = names
            .iter()
            .map(|n| q.vertex(n).map_err(|_| err(line, format!("unknown vertex `{n}`"))))
            .collect::<Result<Vec<_>>>()?;
        pairs.extend(ids.windows(2).map(|w| (w[0], w[1])));
    }
    Ok(())
}

/// Parses the algebra format. Syntax problems are reported as
/// [`Error::Parse`]; a well-formed but non-admissible presentation gives
/// the corresponding domain error.
pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    let mut field = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut quiver: Option<Quiver> = None;
    let mut relations = Vec::new();
    let mut order: Option<(usize, Vec<(usize, usize)>)> = None;
    for (line, l) in lines(text) {
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match kw {
            "field" => {
                if field.is_some() || quiver.is_some() {
                    return Err(err(line, "`field` must come first and only once"));
                }
                field = Some(parse_field(line, rest)?);
            }
            "vertex" => {
                if quiver.is_some() {
                    return Err(err(line, "vertices must be declared before arrows"));
                }
                for v in rest.split_whitespace() {
                    if vertices.iter().any(|w| w == v) {
                        return Err(err(line, format!("duplicate vertex `{v}`")));
                    }
                    vertices.push(v.to_string());
                }
            }
            "arrow" => {
                if quiver.is_none() {
                    quiver = Some(Quiver::new(vertices.clone()).map_err(|e| err(line, e.to_string()))?);
                }
                let q = quiver.as_mut().expect("just set");
                let (name, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| err(line, "expected `arrow name : source -> target`"))?;
                let (s, t) =
                    ends.split_once("->").ok_or_else(|| err(line, "expected `source -> target`"))?;
                let name = name.trim();
                if name.is_empty() || name.contains('*') || name.contains(char::is_whitespace) {
                    return Err(err(line, format!("invalid arrow name `{name}`")));
                }
                if q.arrow_id(name).is_some() {
                    return Err(err(line, format!("duplicate arrow `{name}`")));
                }
                q.add_arrow(name, s.trim(), t.trim()).map_err(|e| err(line, e.to_string()))?;
            }
            "relation" => {
                let q = quiver.as_ref().ok_or_else(|| err(line, "relation before any arrow"))?;
                let f = *field.get_or_insert(Field::Rationals);
                relations.push(parse_relation(q, f, line, rest)?);
            }
            "order" => {
                if quiver.is_none() {
                    quiver = Some(Quiver::new(vertices.clone()).map_err(|e| err(line, e.to_string()))?);
                }
                let q = quiver.as_ref().expect("just set");
                let o = order.get_or_insert((line, Vec::new()));
                parse_order(q, line, rest, &mut o.1)?;
            }
            _ => return Err(err(line, format!("unknown declaration `{kw}`"))),
        }
    }
    if vertices.is_empty() {
        return Err(err(0, "no vertices declared"));
    }
    let quiver = match quiver {
        Some(q) => q,
        None => Quiver::new(vertices).map_err(|e| err(0, e.to_string()))?,
    };
    let field = field.unwrap_or(Field::Rationals);
    let n = quiver.num_vertices();
    let order = match order {
        Some((line, pairs)) => {
            Some(WeightPoset::from_relations(n, &pairs).map_err(|e| err(line, e.to_string()))?)
        }
        None => None,
    };
    let algebra = Algebra::build(quiver, relations, field, DEFAULT_MAX_NILPOTENCY)?;
    Ok(AlgebraFile { algebra, order })
}

/// Parses the poset format: `element w height h` and `cover v < w`.
pub fn parse_poset(text: &str) -> Result<FinitePoset> {
    let mut names: Vec<String> = Vec::new();
    let mut heights = Vec::new();
    let mut covers = Vec::new();
    for (line, l) in lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.as_slice() {
            ["element", w, "height", h] => {
                let h = h.parse::<usize>().map_err(|_| err(line, format!("invalid height `{h}`")))?;
                if names.iter().any(|n| n == w) {
                    return Err(err(line, format!("duplicate element `{w}`")));
                }
                names.push(w.to_string());
                heights.push(h);
            }
            ["cover", v, "<", w] => {
                let find = |x: &str| {
                    names.iter().position(|n| n == x).ok_or_else(|| err(line, format!("unknown element `{x}`")))
                };
                let (a, b) = (find(v)?, find(w)?);
                covers.push((a, b, line));
            }
            _ => return Err(err(line, format!("cannot parse `{l}`"))),
        }
    }
    let pairs: Vec<(usize, usize)> = covers.iter().map(|&(a, b, _)| (a, b)).collect();
    FinitePoset::new(names, heights, &pairs).map_err(|e| {
        let line = covers.last().map_or(0, |c| c.2);
        err(line, e.to_string())
    })
}

struct ModuleDraft {
    line: usize,
    dims: Vec<usize>,
    action: Vec<Option<(usize, Vec<Vec<Scalar>>)>>,
}

impl ModuleDraft {
    fn new(alg: &Algebra, line: usize) -> Self {
        ModuleDraft { line, dims: vec![0; alg.num_vertices()], action: vec![None; alg.quiver().arrows().len()] }
    }

    fn finish(self, alg: &Algebra) -> Result<Module> {
        let f = alg.field();
        let mut mats = Vec::new();
        for (a, arrow) in alg.quiver().arrows().iter().enumerate() {
            let (rows, cols) = (self.dims[arrow.target], self.dims[arrow.source]);
            let m = match &self.action[a] {
                None => Matrix::zeros(f, rows, cols),
                Some((line, r)) => {
                    if r.len() != rows || r.iter().any(|x| x.len() != cols) {
                        return Err(err(*line, format!("action of `{}` must be {rows}×{cols}", arrow.name)));
                    }
                    Matrix::from_rows(f, cols, r)
                }
            };
            mats.push(m);
        }
        let m = Module::new(alg, self.dims, mats).map_err(|e| err(self.line, e.to_string()))?;
        if !m.satisfies_relations(alg) {
            return Err(Error::NotAModule(format!("module starting at line {} violates a relation", self.line)));
        }
        Ok(m)
    }
}

/// Parses a list of modules over `alg`.
pub fn parse_modules(alg: &Algebra, text: &str) -> Result<Vec<Module>> {
    let q = alg.quiver();
    let mut out = Vec::new();
    let mut cur: Option<ModuleDraft> = None;
    for (line, l) in lines(text) {
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        if kw == "module" {
            if let Some(d) = cur.take() {
                out.push(d.finish(alg)?);
            }
            cur = Some(ModuleDraft::new(alg, line));
            continue;
        }
        let d = cur.get_or_insert_with(|| ModuleDraft::new(alg, line));
        match kw {
            "dim" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                let [v, n] = toks.as_slice() else {
                    return Err(err(line, "expected `dim vertex n`"));
                };
                let v = q.vertex(v).map_err(|_| err(line, format!("unknown vertex `{v}`")))?;
                d.dims[v] = n.parse().map_err(|_| err(line, format!("invalid dimension `{n}`")))?;
            }
            "action" => {
                let (name, body) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let a = q.arrow_id(name).ok_or_else(|| err(line, format!("unknown arrow `{name}`")))?;
                let mut rows = Vec::new();
                for row in body.split(';').map(str::trim).filter(|r| !r.is_empty()) {
                    let r = row
                        .split_whitespace()
                        .map(|t| parse_coefficient(alg.field(), line, t)?.ok_or_else(|| err(line, format!("invalid entry `{t}`"))))
                        .collect::<Result<Vec<_>>>()?;
                    rows.push(r);
                }
                d.action[a] = Some((line, rows));
            }
            _ => return Err(err(line, format!("unknown declaration `{kw}`"))),
        }
    }
    if let Some(d) = cur {
        out.push(d.finish(alg)?);
    }
    if out.is_empty() {
        return Err(err(0, "no modules declared"));
    }
    Ok(out)
}
