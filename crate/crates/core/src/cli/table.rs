//! Tabular output shared by every subcommand, and the named golden tables.
//!
//! CSV is the canonical form: a `# source: <name>` line, a header row, then
//! data rows. JSON carries the same cells under the same column names.

use serde_json::{Map, Value};

use crate::enumeration::{ClassFilter, Enumerator};
use crate::error::Result;

/// Names accepted by [`named_table`], in a fixed order.
pub const TABLE_NAMES: [&str; 3] = ["genus-small", "contains-p3", "contains-p4"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Int(i64),
    Text(String),
    Bool(bool),
}

impl Cell {
    pub fn render(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(n) => Value::from(*n),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
        }
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Self {
        Cell::Int(n as i64)
    }
}

impl From<i64> for Cell {
    fn from(n: i64) -> Self {
        Cell::Int(n)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as i64)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub source: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(source: impl Into<String>, columns: &[&str]) -> Self {
        Table {
            source: source.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render)).expect("in-memory write");
        }
        let body = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells");
        format!("# source: {}\n{body}", self.source)
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().cloned().zip(row.iter().map(Cell::to_json)).collect();
                Value::Object(obj)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("source".into(), Value::from(self.source.as_str()));
        doc.insert("columns".into(), Value::from(self.columns.clone()));
        doc.insert("rows".into(), Value::Array(rows));
        let mut out = serde_json::to_string_pretty(&Value::Object(doc)).expect("json values serialize");
        out.push('\n');
        out
    }
}

/// Computes one of [`TABLE_NAMES`]; `None` for an unknown name.
pub fn named_table(name: &str, enumerator: &Enumerator) -> Option<Result<Table>> {
    let table = match name {
        "genus-small" => genus_small(enumerator),
        "contains-p3" => containing(enumerator, name, 3, &[1, 2, 4, 5, 7, 8, 10, 11, 13, 14]),
        "contains-p4" => containing(enumerator, name, 4, &[1, 3, 5, 7, 9, 11, 13, 15]),
        _ => return None,
    };
    Some(table)
}

fn genus_small(e: &Enumerator) -> Result<Table> {
    let filters = [ClassFilter::All, ClassFilter::Medim, ClassFilter::Sym];
    let mut columns = vec!["g".to_string()];
    let mut tables = Vec::new();
    for p in [3, 4] {
        for f in filters {
            let t = e.genus_table(p, 0..=8, f)?;
            columns.push(t.label.clone());
            tables.push(t);
        }
    }
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut out = Table::new("genus-small", &cols);
    for g in 0..=8 {
        let mut row = vec![Cell::from(g)];
        row.extend(tables.iter().map(|t| Cell::from(t.get(g).expect("g in range"))));
        out.push(row);
    }
    Ok(out)
}

fn containing(e: &Enumerator, name: &str, p: u64, qs: &[u64]) -> Result<Table> {
    let filters = [ClassFilter::All, ClassFilter::Medim, ClassFilter::Sym, ClassFilter::Psym];
    let tables: Vec<_> = filters
        .iter()
        .map(|&f| e.containing_table(p, qs.iter().copied(), f))
        .collect::<Result<_>>()?;
    let mut columns = vec!["q"];
    columns.extend(tables.iter().map(|t| t.label.as_str()));
    let mut out = Table::new(name, &columns);
    for &q in qs {
        let mut row = vec![Cell::from(q)];
        row.extend(tables.iter().map(|t| Cell::from(t.get(q).expect("q coprime to p"))));
        out.push(row);
    }
    Ok(out)
}
