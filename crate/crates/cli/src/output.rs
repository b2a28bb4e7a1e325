//! Reports and their three renderings.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Debug)]
pub enum Cell {
    Text(String),
    /// Exact integer of any size; a string in JSON.
    Big(String),
    Int(i64),
    Bool(bool),
    /// 0-based generator indices; `r1r2` in tables, `[1, 2]` in JSON.
    Word(Vec<usize>),
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    pub fn big(x: impl ToString) -> Cell {
        Cell::Big(x.to_string())
    }

    fn render(&self) -> String {
        match self {
            Cell::Text(s) | Cell::Big(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Word(w) if w.is_empty() => "e".into(),
            Cell::Word(w) => w.iter().map(|i| format!("r{}", i + 1)).collect(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) | Cell::Big(s) => Value::String(s.clone()),
            Cell::Int(n) => json!(n),
            Cell::Bool(b) => json!(b),
            Cell::Word(w) => json!(w.iter().map(|i| i + 1).collect::<Vec<_>>()),
        }
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Cell {
        Cell::Int(n as i64)
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Cell {
        Cell::Int(n as i64)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Cell {
        Cell::Bool(b)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Cell {
        Cell::Text(s.into())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Cell {
        Cell::Text(s)
    }
}

#[derive(Clone, Debug)]
pub struct Table {
    pub name: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&'static str]) -> Self {
        Table { name: name.into(), columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Output of one subcommand. The first table is the primary one and the
/// only one written in CSV.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: String,
    pub params: Vec<(String, Cell)>,
    pub bounds: Vec<(String, Cell)>,
    pub tables: Vec<Table>,
    /// Structured results shown only as JSON values.
    pub extra: Vec<(String, Value)>,
    /// Failed identities; a non-empty list means exit code 3.
    pub violations: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.into(), ..Default::default() }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Cell>) -> &mut Self {
        self.params.push((key.into(), value.into()));
        self
    }

    pub fn bound(&mut self, key: &str, value: impl Into<Cell>) -> &mut Self {
        self.bounds.push((key.into(), value.into()));
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.render_table(),
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn pairs(items: &[(String, Cell)]) -> String {
        if items.is_empty() {
            return "none".into();
        }
        items.iter().map(|(k, v)| format!("{k}={}", v.render())).collect::<Vec<_>>().join(" ")
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# schubert-kit {}", self.command).unwrap();
        writeln!(out, "# params: {}", Self::pairs(&self.params)).unwrap();
        writeln!(out, "# bounds: {}", Self::pairs(&self.bounds)).unwrap();
        writeln!(out, "# precision: exact").unwrap();
        for table in &self.tables {
            writeln!(out).unwrap();
            writeln!(out, "## {}", table.name).unwrap();
            let cells: Vec<Vec<String>> = table.rows.iter().map(|r| r.iter().map(Cell::render).collect()).collect();
            let widths: Vec<usize> = (0..table.columns.len())
                .map(|j| cells.iter().map(|r| r[j].chars().count()).chain([table.columns[j].len()]).max().unwrap_or(0))
                .collect();
            let line = |row: Vec<&str>| -> String {
                let padded: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
                padded.join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", line(table.columns.clone())).unwrap();
            for r in &cells {
                writeln!(out, "{}", line(r.iter().map(String::as_str).collect())).unwrap();
            }
        }
        for (key, value) in &self.extra {
            writeln!(out).unwrap();
            writeln!(out, "## {key}").unwrap();
            writeln!(out, "{value}").unwrap();
        }
        if !self.violations.is_empty() {
            writeln!(out).unwrap();
            writeln!(out, "## violations").unwrap();
            for v in &self.violations {
                writeln!(out, "{v}").unwrap();
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        if let Some(table) = self.tables.first() {
            w.write_record(&table.columns).unwrap();
            for row in &table.rows {
                w.write_record(row.iter().map(Cell::render)).unwrap();
            }
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    fn render_json(&self) -> String {
        let object = |items: &[(String, Cell)]| -> Value {
            Value::Object(items.iter().map(|(k, v)| (k.clone(), v.json())).collect())
        };
        let mut params = object(&self.params);
        params["command"] = json!(self.command);
        params["precision"] = json!("exact");
        let mut results = Map::new();
        for table in &self.tables {
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|r| Value::Object(table.columns.iter().zip(r).map(|(c, v)| (c.to_string(), v.json())).collect()))
                .collect();
            results.insert(table.name.clone(), Value::Array(rows));
        }
        for (key, value) in &self.extra {
            results.insert(key.clone(), value.clone());
        }
        results.insert("violations".into(), json!(self.violations));
        let top = json!({ "params": params, "results": results, "bounds": object(&self.bounds) });
        let mut s = serde_json::to_string_pretty(&top).unwrap();
        s.push('\n');
        s
    }
}
