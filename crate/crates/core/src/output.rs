//! Plot-ready tables: CSV with a header row and trailing `#` comment lines,
//! or JSON as an array of objects with the same fields.

use std::io::{self, Write};

use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<String>) -> Self {
        Self { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// CSV followed by one `# ...` line per comment.
    pub fn write_csv<W: Write>(&self, out: W, comments: &[String]) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let mut out = w.into_inner().map_err(|e| e.into_error())?;
        for c in comments {
            writeln!(out, "# {c}")?;
        }
        Ok(())
    }

    /// Cells that parse as numbers become JSON numbers, empty cells `null`.
    /// Integers too large for `i64` are kept as strings.
    pub fn to_json(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (k, v) in self.header.iter().zip(row) {
                    obj.insert(k.clone(), cell(v));
                }
                Value::Object(obj)
            })
            .collect();
        Value::Array(rows)
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut out, &self.to_json())?;
        writeln!(out)
    }
}

fn cell(v: &str) -> Value {
    if v.is_empty() {
        return Value::Null;
    }
    if let Ok(i) = v.parse::<i64>() {
        return Value::from(i);
    }
    if v.trim_start_matches('-').chars().all(|c| c.is_ascii_digit()) {
        // integers beyond i64 stay exact as strings
        return Value::String(v.to_string());
    }
    match v.parse::<f64>() {
        Ok(f) if f.is_finite() => Value::from(f),
        _ => Value::String(v.to_string()),
    }
}

/// Shortest round-trippable formatting for floats.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:e}")
}

/// Column names `prefix_1, …, prefix_n`.
pub fn indexed(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}_{i}")).collect()
}
