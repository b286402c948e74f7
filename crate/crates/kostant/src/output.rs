//! Rendering of row tables as aligned text, CSV or JSON.

use std::io::Write;

use serde_json::{Map, Value};

use crate::config::Format;
use crate::error::{Error, Result};

/// A table with named columns and string cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    /// Column names.
    pub columns: Vec<&'static str>,
    /// Rows, each as long as `columns`.
    pub rows: Vec<Vec<String>>,
}

impl Table {
    /// An empty table.
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    /// Appends a row.
    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Rows as JSON objects with keys in column order.
    pub fn to_json(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> =
                    self.columns.iter().zip(r).map(|(c, v)| (c.to_string(), Value::String(v.clone()))).collect();
                Value::Object(obj)
            })
            .collect();
        Value::Array(rows)
    }

    /// Writes the table in `format`.
    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<()> {
        match format {
            Format::Text => self.write_text(out),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush().map_err(|e| Error::io("<output>", e))
            }
            Format::Json => write_json(&self.to_json(), out),
        }
    }

    fn write_text(&self, out: &mut dyn Write) -> Result<()> {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for r in &self.rows {
            for (w, cell) in widths.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let mut s = String::new();
            for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
                if i + 1 == cells.len() {
                    s.push_str(c);
                } else {
                    s.push_str(c);
                    s.push_str(&" ".repeat(w - c.chars().count() + 2));
                }
            }
            s
        };
        let mut text = line(self.columns.clone());
        text.push('\n');
        for r in &self.rows {
            text.push_str(&line(r.iter().map(String::as_str).collect()));
            text.push('\n');
        }
        out.write_all(text.as_bytes()).map_err(|e| Error::io("<output>", e))
    }
}

/// Pretty-printed JSON followed by a newline.
pub fn write_json(value: &impl serde::Serialize, out: &mut dyn Write) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    out.write_all(text.as_bytes()).map_err(|e| Error::io("<output>", e))
}

/// Writes a line of text.
pub fn write_line(out: &mut dyn Write, line: &str) -> Result<()> {
    writeln!(out, "{line}").map_err(|e| Error::io("<output>", e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(vec!["d", "K"]);
        t.push(vec!["12_1".into(), "true".into()]);
        t.push(vec!["e".into(), "false, maybe".into()]);
        t
    }

    fn render(f: Format) -> String {
        let mut out = Vec::new();
        sample().write(f, &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn formats() {
        assert_eq!(render(Format::Text), "d     K\n12_1  true\ne     false, maybe\n");
        assert_eq!(render(Format::Csv), "d,K\n12_1,true\ne,\"false, maybe\"\n");
        let v: Value = serde_json::from_str(&render(Format::Json)).unwrap();
        assert_eq!(v[1]["K"], "false, maybe");
    }
}
