//! Deterministic text reports: `key: value` sections and tab-separated
//! tables, or one flat record per line with `--format records`.

use std::fmt::Write;

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<String>)>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, id: impl Into<String>, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push((id.into(), cells));
    }
}

#[derive(Clone, Debug, Default)]
pub struct Section {
    pub name: String,
    pub values: Vec<(String, String)>,
    pub tables: Vec<Table>,
}

impl Section {
    pub fn new(name: &str) -> Self {
        Section { name: name.into(), ..Default::default() }
    }

    pub fn kv(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.values.push((key.into(), value.to_string()));
        self
    }

    pub fn table(&mut self, t: Table) -> &mut Self {
        self.tables.push(t);
        self
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub digest: String,
    pub params: Vec<(String, String)>,
    pub sections: Vec<Section>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Records,
}

impl Report {
    pub fn new(command: &str, digest: String) -> Self {
        Report { command: command.into(), digest, params: Vec::new(), sections: Vec::new() }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.push((key.into(), value.to_string()));
    }

    pub fn push(&mut self, s: Section) {
        self.sections.push(s);
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Text => self.text(),
            Format::Records => self.records(),
        }
    }

    fn text(&self) -> String {
        let mut o = String::new();
        writeln!(o, "command: {}", self.command).unwrap();
        writeln!(o, "input: sha256:{}", self.digest).unwrap();
        for (k, v) in &self.params {
            writeln!(o, "param {k}: {v}").unwrap();
        }
        for s in &self.sections {
            writeln!(o, "\n[{}]", s.name).unwrap();
            for (k, v) in &s.values {
                writeln!(o, "{k}: {v}").unwrap();
            }
            for t in &s.tables {
                writeln!(o, "\n{}", t.name).unwrap();
                writeln!(o, "\t{}", t.columns.join("\t")).unwrap();
                for (id, cells) in &t.rows {
                    writeln!(o, "{id}\t{}", cells.join("\t")).unwrap();
                }
            }
        }
        o
    }

    /// `section  table  row  column  value`, tab separated.
    fn records(&self) -> String {
        let mut o = String::new();
        writeln!(o, "meta\t-\tcommand\t-\t{}", self.command).unwrap();
        writeln!(o, "meta\t-\tinput\t-\tsha256:{}", self.digest).unwrap();
        for (k, v) in &self.params {
            writeln!(o, "param\t-\t{k}\t-\t{v}").unwrap();
        }
        for s in &self.sections {
            for (k, v) in &s.values {
                writeln!(o, "{}\t-\t{k}\t-\t{v}", s.name).unwrap();
            }
            for t in &s.tables {
                for (id, cells) in &t.rows {
                    for (c, v) in t.columns.iter().zip(cells) {
                        writeln!(o, "{}\t{}\t{id}\t{c}\t{v}", s.name, t.name).unwrap();
                    }
                }
            }
        }
        o
    }
}
