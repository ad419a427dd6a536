use std::fmt::Write as _;
use std::fs;

use serde_json::{Map, Value};

use crate::config::{CliConfig, Format};
use crate::CliError;

/// Sixteen significant digits, positional where that stays readable.
pub fn sig16(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..16).contains(&exp) {
        format!("{:.*}", (15 - exp) as usize, x)
    } else {
        format!("{x:.15e}")
    }
}

/// Seventeen significant digits; round-trips every `f64`.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Str(String),
    Int(u64),
    Float(f64),
    Bool(bool),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Str(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Float(x) => sig16(*x),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn machine(&self) -> String {
        match self {
            Cell::Float(x) => sig17(*x),
            other => other.text(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Str(s) => Value::String(s.clone()),
            Cell::Int(n) => Value::from(*n),
            Cell::Float(x) => Value::from(*x),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Str(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Str(s)
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Self {
        Cell::Int(n)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Self {
            headers: headers.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    fn json_rows(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .headers
                    .iter()
                    .zip(row)
                    .map(|(h, c)| (h.to_string(), c.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect()
    }

    /// Renders the table; a single-row JSON table becomes one object.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut rows = self.json_rows();
                let value = if rows.len() == 1 {
                    rows.remove(0)
                } else {
                    Value::Array(rows)
                };
                let mut s = serde_json::to_string_pretty(&value).expect("json value");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).expect("in-memory write");
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::machine))
                        .expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
            }
            Format::Markdown => {
                let mut s = format!("| {} |\n", self.headers.join(" | "));
                let _ = writeln!(s, "|{}", "---|".repeat(self.headers.len()));
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::text).collect();
                    let _ = writeln!(s, "| {} |", cells.join(" | "));
                }
                s
            }
            Format::Text => {
                let cells: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|r| r.iter().map(Cell::text).collect())
                    .collect();
                let widths: Vec<usize> = self
                    .headers
                    .iter()
                    .enumerate()
                    .map(|(i, h)| cells.iter().map(|r| r[i].len()).fold(h.len(), usize::max))
                    .collect();
                let line = |items: Vec<&str>| {
                    let padded: Vec<String> = items
                        .iter()
                        .zip(&widths)
                        .map(|(s, w)| format!("{s:<w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_string()
                };
                let mut s = line(self.headers.clone());
                s.push('\n');
                for r in &cells {
                    s.push_str(&line(r.iter().map(String::as_str).collect()));
                    s.push('\n');
                }
                s
            }
        }
    }
}

/// Key/value record: one row in machine formats, `key  value` lines in text.
pub fn record(fields: &[(&'static str, Cell)], format: Format) -> String {
    match format {
        Format::Text => {
            let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            fields
                .iter()
                .map(|(k, v)| format!("{k:<width$}  {}\n", v.text()))
                .collect()
        }
        _ => {
            let mut t = Table::new(&fields.iter().map(|(k, _)| *k).collect::<Vec<_>>());
            t.push(fields.iter().map(|(_, v)| v.clone()).collect());
            t.render(format)
        }
    }
}

pub fn emit(cfg: &CliConfig, body: &str) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => fs::write(path, body)
            .map_err(|e| CliError::failure(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_digits() {
        assert_eq!(sig16(1.2020569031595942), "1.202056903159594");
        assert_eq!(sig16(0.915965594177219), "0.9159655941772190");
        assert_eq!(sig16(0.0), "0");
        assert_eq!(sig16(1.5e-20), "1.500000000000000e-20");
        assert_eq!(sig16(-0.5), "-0.5000000000000000");
    }

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, 1.0 / 3.0, std::f64::consts::PI, 1e-300, 6.02e23] {
            assert_eq!(sig17(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }

    #[test]
    fn table_formats() {
        let mut t = Table::new(&["id", "value"]);
        t.push(vec!["a".into(), 0.5.into()]);
        t.push(vec!["b".into(), 2u64.into()]);
        let csv = t.render(Format::Csv);
        assert_eq!(csv.lines().next(), Some("id,value"));
        assert_eq!(csv.lines().count(), 3);
        let json: Value = serde_json::from_str(&t.render(Format::Json)).unwrap();
        assert_eq!(json.as_array().unwrap().len(), 2);
        assert_eq!(t.render(Format::Markdown).lines().count(), 4);
        assert!(t.render(Format::Text).starts_with("id"));
    }
}
