//! One function per subcommand, each turning parsed input into a report.

use borel_core::ainf::{check_stasheff, koszul_reconstruct, merkulov, AInfinity, SparseVec, SplittingPolicy};
use borel_core::ext::{ext_table, SplitOrder, Splitting};
use borel_core::module::Module;
use borel_core::parse::{parse_modules, AlgebraFile};
use borel_core::pipeline::{default_arity, dg_of, simples};
use borel_core::qh::*;
use borel_core::{Algebra, Error, Execution, Result};

use crate::report::{Report, Section, Table};

#[derive(Clone, Debug)]
pub enum Modules {
    Simples,
    Standards,
    /// Contents of a module file.
    File(String),
}

impl Modules {
    pub fn parse(s: &str) -> Self {
        match s {
            "simples" => Modules::Simples,
            "standards" => Modules::Standards,
            path => Modules::File(path.to_string()),
        }
    }
}

fn vname(alg: &Algebra, i: usize) -> String {
    alg.quiver().vertices()[i].clone()
}

fn order_of(f: &AlgebraFile) -> WeightPoset {
    f.order.clone().unwrap_or_else(|| WeightPoset::natural(f.algebra.num_vertices()))
}

fn order_name(alg: &Algebra, order: &[usize]) -> String {
    order.iter().map(|&v| vname(alg, v)).collect::<Vec<_>>().join("<")
}

fn poset_name(alg: &Algebra, p: &WeightPoset) -> String {
    let c: Vec<String> = p.covers().iter().map(|&(a, b)| format!("{}<{}", vname(alg, a), vname(alg, b))).collect();
    if c.is_empty() {
        "discrete".into()
    } else {
        c.join(", ")
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Resolved modules with a label for each.
fn load_modules(f: &AlgebraFile, which: &Modules, text: Option<&str>) -> Result<(Vec<Module>, Vec<String>)> {
    let alg = &f.algebra;
    let names = |k: usize, p: &str| -> Vec<String> { (0..k).map(|i| format!("{p}{}", vname(alg, i))).collect() };
    match which {
        Modules::Simples => Ok((simples(alg)?, names(alg.num_vertices(), "L"))),
        Modules::Standards => {
            let sys = standard_modules(alg, &order_of(f))?;
            Ok((sys.delta, names(alg.num_vertices(), "D")))
        }
        Modules::File(_) => {
            let ms = parse_modules(alg, text.unwrap_or(""))?;
            let n = ms.len();
            Ok((ms, (1..=n).map(|k| format!("M{k}")).collect()))
        }
    }
}

pub fn ext(r: &mut Report, f: &AlgebraFile, which: &Modules, text: Option<&str>, max_degree: usize) -> Result<()> {
    let (mods, names) = load_modules(f, which, text)?;
    let dg = dg_of(&f.algebra, &mods, max_degree, Execution::Parallel)?;
    let t = ext_table(&dg, &Splitting::new(&dg, SplitOrder::Forward));
    let top = t.max_degree().min(max_degree);
    let mut s = Section::new("ext");
    s.kv("exact", yn(t.complete)).kv("degrees", format!("0..{top}"));
    let cols: Vec<String> = (0..=top).map(|n| format!("Ext{n}")).collect();
    let mut tab = Table::new("dims", &cols.iter().map(String::as_str).collect::<Vec<_>>());
    for i in 0..mods.len() {
        for j in 0..mods.len() {
            tab.row(format!("{}->{}", names[i], names[j]), (0..=top).map(|n| t.get(n, i, j).to_string()).collect());
        }
    }
    s.table(tab);
    r.push(s);
    Ok(())
}

fn gen_name(k: usize) -> String {
    format!("x{k}")
}

fn value(v: &SparseVec) -> String {
    v.iter().map(|(g, c)| format!("{c} {}", gen_name(*g))).collect::<Vec<_>>().join(" + ")
}

fn basis_section(a: &AInfinity, names: &[String]) -> Section {
    let mut s = Section::new("basis");
    let mut t = Table::new("generators", &["degree", "source", "target"]);
    for (k, g) in a.basis.iter().enumerate() {
        t.row(gen_name(k), vec![g.degree.to_string(), names[g.src].clone(), names[g.tgt].clone()]);
    }
    s.table(t);
    s
}

pub fn ainf(
    r: &mut Report,
    f: &AlgebraFile,
    which: &Modules,
    text: Option<&str>,
    max_degree: usize,
    arity: usize,
) -> Result<()> {
    let (mods, names) = load_modules(f, which, text)?;
    let dg = dg_of(&f.algebra, &mods, max_degree, Execution::Parallel)?;
    let a = merkulov(&dg, arity, SplittingPolicy::default())?;
    r.push(basis_section(&a, &names));
    let mut s = Section::new("products");
    for n in 2..a.tables.len().min(arity + 1) {
        let mut rows: Vec<(&Vec<usize>, &SparseVec)> = a.tables[n].iter().filter(|(_, v)| !v.is_empty()).collect();
        rows.sort_by(|a, b| a.0.cmp(b.0));
        let mut t = Table::new(&format!("m{n}"), &["value"]);
        for (tuple, v) in rows {
            let id = tuple.iter().map(|&g| gen_name(g)).collect::<Vec<_>>().join(",");
            t.row(id, vec![value(v)]);
        }
        s.kv(&format!("m{n} nonzero"), t.rows.len());
        s.table(t);
    }
    r.push(s);
    let st = check_stasheff(&a, arity, Execution::Parallel);
    let mut s = Section::new("stasheff");
    s.kv("checked", st.total_checked()).kv("skipped", st.skipped).kv("residual nonzero", st.failures.len());
    s.kv("passed", yn(st.passed()));
    r.push(s);
    Ok(())
}

pub fn reconstruct(r: &mut Report, f: &AlgebraFile, arity: Option<usize>) -> Result<()> {
    let alg = &f.algebra;
    let arity = arity.unwrap_or_else(|| default_arity(alg));
    r.param("max-arity", arity);
    let dg = dg_of(alg, &simples(alg)?, borel_core::pipeline::DEFAULT_TRUNCATION, Execution::Parallel)?;
    let a = merkulov(&dg, arity, SplittingPolicy::default())?;
    let rec = koszul_reconstruct(&a, alg.field())?;
    let q = &rec.sketch.quiver;
    let mut s = Section::new("quiver");
    let mut t = Table::new("arrows", &["source", "target"]);
    for ar in q.arrows() {
        t.row(&ar.name, vec![vname(alg, ar.source), vname(alg, ar.target)]);
    }
    s.kv("vertices", q.num_vertices()).kv("arrows", q.arrows().len()).table(t);
    r.push(s);
    let mut s = Section::new("relations");
    for (k, rel) in rec.sketch.relations.iter().enumerate() {
        s.kv(&format!("r{}", k + 1), rel.display(q));
    }
    r.push(s);
    let (old, new) = (alg.dimension_table(), rec.algebra.dimension_table());
    let mut t = Table::new("dimensions", &["input", "rebuilt", "diff"]);
    let mut total = 0i64;
    for i in 0..old.len() {
        for j in 0..old.len() {
            let (x, y) = (old[i][j] as i64, new[i][j] as i64);
            total += (x - y).abs();
            t.row(format!("{}->{}", vname(alg, i), vname(alg, j)), vec![x.to_string(), y.to_string(), (y - x).to_string()]);
        }
    }
    let mut s = Section::new("comparison");
    s.kv("total diff", total).table(t);
    r.push(s);
    Ok(())
}

fn dims_table(alg: &Algebra, name: &str, mods: &[Module]) -> Table {
    let cols: Vec<String> = (0..alg.num_vertices()).map(|v| vname(alg, v)).collect();
    let mut t = Table::new(name, &cols.iter().map(String::as_str).collect::<Vec<_>>());
    for (i, m) in mods.iter().enumerate() {
        t.row(vname(alg, i), m.dims().iter().map(|d| d.to_string()).collect());
    }
    t
}

fn system(r: &mut Report, f: &AlgebraFile) -> Result<StandardSystem> {
    let alg = &f.algebra;
    let order = order_of(f);
    r.param("order", if f.order.is_some() { poset_name(alg, &order) } else { "natural".into() });
    let sys = standard_modules(alg, &order)?;
    let v = is_quasi_hereditary(alg, &sys);
    if !v.quasi_hereditary {
        return Err(Error::NotQuasiHereditary(v.diagnosis.join("; ")));
    }
    Ok(sys)
}

pub fn qh(r: &mut Report, f: &AlgebraFile) -> Result<()> {
    let alg = &f.algebra;
    let sys = system(r, f)?;
    let v = is_quasi_hereditary(alg, &sys);
    let mut s = Section::new("verdict");
    s.kv("quasi-hereditary", yn(v.quasi_hereditary)).kv("tests agree", yn(v.tests_agree()));
    r.push(s);
    let mut s = Section::new("modules");
    s.table(dims_table(alg, "standard", &sys.delta)).table(dims_table(alg, "costandard", &sys.nabla));
    r.push(s);
    let e = essential_order(alg, &sys)?;
    let mut s = Section::new("essential order");
    s.kv("covers", poset_name(alg, &e.by_multiplicities)).kv("generating sets agree", yn(e.agree()));
    r.push(s);
    let l = conde_multiplicities(alg, &sys)?;
    let mut s = Section::new("conde");
    let mut t = Table::new("multiplicities", &["ell"]);
    for (i, x) in l.iter().enumerate() {
        t.row(vname(alg, i), vec![x.to_string()]);
    }
    s.table(t).kv("criterion", yn(conde_criterion(alg, &sys)?));
    r.push(s);
    Ok(())
}

pub fn borel(r: &mut Report, f: &AlgebraFile) -> Result<()> {
    let alg = &f.algebra;
    let sys = system(r, f)?;
    let b = borel_data(alg, &sys, Execution::Parallel)?;
    let n = alg.num_vertices();
    let mut s = Section::new("borel quiver");
    let mut t = Table::new("arrows", &["count"]);
    for i in 0..n {
        for j in 0..n {
            if b.ext1[i][j] > 0 {
                t.row(format!("{}->{}", vname(alg, i), vname(alg, j)), vec![b.ext1[i][j].to_string()]);
            }
        }
    }
    s.kv("dimension", b.algebra.dim()).table(t);
    for (k, rel) in b.sketch.relations.iter().enumerate() {
        s.kv(&format!("relation {}", k + 1), rel.display(&b.sketch.quiver));
    }
    r.push(s);
    let mut s = Section::new("vbar");
    let mut t = Table::new("generators", &["count"]);
    for i in 0..n {
        for j in 0..n {
            let c = b.vbar.iter().filter(|g| g.src == i && g.tgt == j).count();
            if c > 0 {
                t.row(format!("{}->{}", vname(alg, i), vname(alg, j)), vec![c.to_string()]);
            }
        }
    }
    s.kv("dimension", b.vbar.len()).table(t);
    r.push(s);
    let mut s = Section::new("differential");
    match b.check_square_zero() {
        Ok(()) => s.kv("d^2", "0"),
        Err(e) => s.kv("d^2", e),
    };
    r.push(s);
    let c = roiter_coring(&b)?;
    let rep = &c.report;
    let mut s = Section::new("coring");
    s.kv("coassociative", yn(rep.coassociative)).kv("counit", yn(rep.counit));
    s.kv("group-like", yn(rep.group_like)).kv("bimodule", yn(rep.bimodule));
    r.push(s);
    let l = conde_multiplicities(alg, &sys)?;
    let ra = right_algebra(&c, &sys, &l)?;
    let opt = |x: Option<usize>| x.map_or("unavailable".to_string(), |v| v.to_string());
    let mut s = Section::new("right algebra");
    s.kv("dimension", ra.dim).kv("associative", yn(ra.associative)).kv("contains A", yn(ra.contains_a));
    s.kv("projective over A", yn(ra.projective)).kv("dim R/rad R", opt(ra.semisimple_dim));
    s.kv("primitive idempotents", opt(ra.idempotents)).kv("simple components", opt(ra.components));
    let mut t = Table::new("induced", &["R(x)L", "dim Delta", "expected"]);
    for i in 0..n {
        t.row(
            vname(alg, i),
            vec![ra.induced_simples[i].to_string(), sys.delta[i].dim().to_string(), ra.expected_induced[i].to_string()],
        );
    }
    s.table(t);
    r.push(s);
    Ok(())
}

pub fn conde_poset_cmd(r: &mut Report, p: &FinitePoset) {
    let l = conde_poset(p);
    let mut t = Table::new("multiplicities", &["height", "ell"]);
    for (x, v) in l.iter().enumerate() {
        t.row(&p.names[x], vec![p.heights[x].to_string(), v.to_string()]);
    }
    let mut s = Section::new("conde");
    s.kv("elements", p.len()).table(t);
    r.push(s);
}

pub fn enumerate(r: &mut Report, f: &AlgebraFile, cap: usize) -> Result<()> {
    let alg = &f.algebra;
    let e = enumerate_qh_structures(alg, cap, Execution::Parallel)?;
    let mut t = Table::new("structures", &["order", "standard dims"]);
    for (k, (o, d)) in e.orders.iter().zip(&e.delta_dims).enumerate() {
        let dims: Vec<String> = d.iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        t.row((k + 1).to_string(), vec![order_name(alg, o), dims.join(" ")]);
    }
    let mut s = Section::new("enumeration");
    s.kv("count", e.count()).table(t);
    r.push(s);
    Ok(())
}
