//! Report assembly and rendering: one envelope, three formats.
//!
//! Every command produces a `Report` (parameters, fixed columns, rows,
//! notes) rendered as an aligned table, CSV, or JSON. All floating-point
//! output carries 12 significant digits, and a given report renders to
//! byte-identical output on every run.

use std::fmt::Write as _;

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format {other:?}: expected table, csv, or json")),
        }
    }
}

/// One table cell.
#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// Format with 12 significant digits.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    format!("{:.11e}", x)
}

/// Round to 12 significant digits, for JSON number output.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor();
    let factor = 10f64.powf(11.0 - magnitude);
    if factor.is_finite() && factor > 0.0 {
        (x * factor).round() / factor
    } else {
        x
    }
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(v) => format_sig(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            Cell::Num(v) => serde_json::json!(round_sig(*v)),
            Cell::Int(v) => serde_json::json!(v),
            Cell::Text(s) => serde_json::json!(s),
            Cell::Empty => serde_json::Value::Null,
        }
    }
}

/// The uniform report envelope shared by all commands.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub seed: Option<u64>,
    /// Echoed parameters, in insertion order.
    pub params: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            seed: None,
            params: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.to_table(),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "gml {}", self.command).unwrap();
        for (k, v) in &self.params {
            writeln!(out, "  {k} = {v}").unwrap();
        }
        if !self.columns.is_empty() {
            let rendered: Vec<Vec<String>> = self
                .rows
                .iter()
                .map(|row| row.iter().map(Cell::render).collect())
                .collect();
            let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
            for row in &rendered {
                for (i, cell) in row.iter().enumerate() {
                    if i < widths.len() {
                        widths[i] = widths[i].max(cell.len());
                    }
                }
            }
            let header: Vec<String> = self
                .columns
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{:<width$}", c, width = widths[i]))
                .collect();
            writeln!(out, "  {}", header.join("  ")).unwrap();
            let rule_len: usize = widths.iter().sum::<usize>() + 2 * (widths.len().max(1) - 1);
            writeln!(out, "  {}", "-".repeat(rule_len)).unwrap();
            for row in &rendered {
                let line: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(i, cell)| format!("{:<width$}", cell, width = widths[i]))
                    .collect();
                writeln!(out, "  {}", line.join("  ")).unwrap();
            }
        }
        for note in &self.notes {
            writeln!(out, "  * {note}").unwrap();
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.columns.join(",")).unwrap();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|c| csv_escape(&c.render())).collect();
            writeln!(out, "{}", line.join(",")).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let params: serde_json::Map<String, serde_json::Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::json!(v)))
            .collect();
        let rows: Vec<Vec<serde_json::Value>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Cell::to_json).collect())
            .collect();
        let value = serde_json::json!({
            "command": self.command,
            "seed": self.seed,
            "params": params,
            "columns": self.columns,
            "rows": rows,
            "notes": self.notes,
        });
        serde_json::to_string_pretty(&value).expect("report serialization")
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
