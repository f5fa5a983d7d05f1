use std::process::{Command, Output};

fn borel(args: &[&str]) -> Output {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data");
    Command::new(env!("CARGO_BIN_EXE_borel")).current_dir(dir).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = borel(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

/// Cells of a table row, found by row id.
fn row<'a>(out: &'a str, id: &str) -> Vec<&'a str> {
    let line = out.lines().find(|l| l.split('\t').next() == Some(id)).unwrap_or_else(|| panic!("no row {id}"));
    line.split('\t').skip(1).collect()
}

/// Rows of the named table, as `(id, cells)`.
fn table<'a>(out: &'a str, name: &str) -> Vec<(&'a str, Vec<&'a str>)> {
    let mut it = out.lines().skip_while(|l| *l != name).skip(2);
    let mut rows = Vec::new();
    while let Some(l) = it.next().filter(|l| !l.is_empty()) {
        let mut c = l.split('\t');
        rows.push((c.next().unwrap(), c.collect()));
    }
    rows
}

fn value<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines().find_map(|l| l.strip_prefix(&format!("{key}: "))).unwrap_or_else(|| panic!("no key {key}"))
}

#[test]
fn ext_linear_a3() {
    let out = ok(&["ext", "a3_rad2.alg", "--max-degree", "4"]);
    assert_eq!(row(&out, "L1->L2"), ["0", "1", "0"]);
    assert_eq!(row(&out, "L2->L3"), ["0", "1", "0"]);
    assert_eq!(row(&out, "L1->L3"), ["0", "0", "1"]);
    assert_eq!(row(&out, "L2->L1"), ["0", "0", "0"]);
}

#[test]
fn ext_truncated_polynomial() {
    let out = ok(&["ext", "t3.alg", "--max-degree", "8"]);
    let r = row(&out, "L1->L1");
    assert!(r.len() >= 7);
    assert!(r.iter().all(|&c| c == "1"));
}

#[test]
fn ext_semisimple() {
    let out = ok(&["ext", "semisimple.alg"]);
    assert_eq!(row(&out, "L1->L1"), ["1"]);
    assert_eq!(row(&out, "L1->L2"), ["0"]);
}

#[test]
fn ext_between_module_file_entries() {
    // L1, L2 and P1; the projective has no higher Ext to anything.
    let out = ok(&["ext", "a3_rad2.alg", "--modules", "a3_modules.mod"]);
    assert_eq!(row(&out, "M1->M2")[..2], ["0", "1"]);
    assert_eq!(row(&out, "M3->M1")[0], "1");
    for m in ["M1", "M2", "M3"] {
        assert!(row(&out, &format!("M3->{m}")).iter().skip(1).all(|&c| c == "0"));
    }
}

#[test]
fn ext_of_standard_modules() {
    let out = ok(&["ext", "zigzag_a5.alg", "--modules", "standards"]);
    assert_eq!(row(&out, "D2->D3")[0], "1");
    assert_eq!(row(&out, "D1->D2")[1], "1");
}

#[test]
fn ainf_biserial_has_m3() {
    let out = ok(&["ainf", "biserial.alg", "--max-arity", "4"]);
    assert_ne!(value(&out, "m3 nonzero"), "0");
    assert_eq!(value(&out, "passed"), "yes");
}

#[test]
fn ainf_truncated_polynomial_and_path_algebra() {
    let out = ok(&["ainf", "t3.alg", "--max-arity", "4"]);
    assert_ne!(value(&out, "m3 nonzero"), "0");
    let out = ok(&["ainf", "a3.alg", "--max-arity", "5"]);
    for n in 3..=5 {
        assert_eq!(value(&out, &format!("m{n} nonzero")), "0");
    }
}

#[test]
fn reconstruct_roundtrip() {
    for f in ["a3_rad2.alg", "biserial.alg", "t3.alg", "zigzag_a5.alg"] {
        assert_eq!(value(&ok(&["reconstruct", f]), "total diff"), "0", "{f}");
    }
    let out = ok(&["reconstruct", "semisimple.alg"]);
    assert_eq!(value(&out, "arrows"), "0");
}

#[test]
fn qh_reports() {
    let out = ok(&["qh", "zigzag_a5.alg"]);
    let ell: Vec<&str> = table(&out, "multiplicities").iter().map(|r| r.1[0]).collect();
    assert_eq!(ell, ["1", "1", "2", "1", "3"]);
    assert_eq!(value(&out, "covers"), "1<2, 2<3, 3<4, 4<5");
    let out = ok(&["qh", "multi_arrow_1_2.alg"]);
    let ell: Vec<&str> = table(&out, "multiplicities").iter().map(|r| r.1[0]).collect();
    assert_eq!(ell, ["4", "1", "1"]);
    assert_eq!(value(&out, "criterion"), "no");
    let out = ok(&["qh", "semisimple.alg"]);
    assert!(table(&out, "multiplicities").iter().all(|r| r.1 == ["1"]));
}

#[test]
fn borel_reports() {
    let out = ok(&["borel", "multi_arrow_1_2.alg"]);
    assert_eq!(row(&out, "2->3"), ["2"]);
    assert_eq!(row(&out, "2->1"), ["3"]);
    assert_eq!(value(&out, "d^2"), "0");
    assert_eq!(value(&out, "coassociative"), "yes");
    assert_eq!(value(&out, "projective over A"), "yes");
    let out = ok(&["borel", "zigzag_a5.alg"]);
    assert_eq!(table(&out, "induced")[2], ("3", vec!["3", "2", "3"]));
    let out = ok(&["borel", "semisimple.alg"]);
    assert!(out.contains("[borel quiver]\ndimension: 2\n"));
}

#[test]
fn conde_poset_reports() {
    let out = ok(&["conde-poset", "chain.poset"]);
    let ell: Vec<&str> = ["a", "b", "c", "d"].iter().map(|x| row(&out, x)[1]).collect();
    assert_eq!(ell, ["1", "1", "2", "4"]);
    let out = ok(&["conde-poset", "antichain.poset"]);
    assert!(["x", "y", "z"].iter().all(|x| row(&out, x)[1] == "1"));
    let out = ok(&["conde-poset", "dihedral5.poset"]);
    for (x, e) in [("e", "1"), ("s", "1"), ("ts", "3"), ("sts", "9"), ("tsts", "27"), ("ststs", "81")] {
        assert_eq!(row(&out, x)[1], e, "{x}");
    }
}

#[test]
fn enumerate_counts() {
    assert_eq!(value(&ok(&["enumerate", "a3.alg"]), "count"), "5");
    assert_eq!(value(&ok(&["enumerate", "a4.alg"]), "count"), "14");
    assert_eq!(value(&ok(&["enumerate", "point.alg"]), "count"), "1");
    assert_eq!(borel(&["enumerate", "a4.alg", "--cap", "3"]).status.code(), Some(1));
}

#[test]
fn exit_codes_and_locations() {
    let o = borel(&["ext", "syntax.alg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax.alg:3:"));
    let o = borel(&["ext", "non_admissible.alg"]);
    assert_eq!(o.status.code(), Some(1));
    let o = borel(&["qh", "t3.alg"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not quasi-hereditary"));
    assert_eq!(borel(&["ext", "missing.alg"]).status.code(), Some(2));
    let o = borel(&["conde-poset", "a3.alg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("a3.alg:1:"));
}

#[test]
fn output_is_reproducible() {
    for args in [vec!["ainf", "biserial.alg"], vec!["borel", "zigzag_a5.alg", "--format", "records"]] {
        assert_eq!(ok(&args), ok(&args));
    }
}

#[test]
fn records_format() {
    let out = ok(&["ext", "a3_rad2.alg", "--max-degree", "4", "--format", "records"]);
    assert!(out.lines().all(|l| l.split('\t').count() == 5));
    assert!(out.lines().any(|l| l == "ext\tdims\tL1->L3\tExt2\t1"));
    assert!(out.lines().any(|l| l.starts_with("meta\t-\tinput\t-\tsha256:")));
}
