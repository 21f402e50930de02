//! One command result in all three output formats.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::CliError;

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "transgen/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// A fixed-column table for CSV and aligned text output.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn aligned(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_owned() + "\n"
        };
        let mut out = line(self.header.clone());
        for row in &self.rows {
            out += &line(row.iter().map(String::as_str).collect());
        }
        out
    }
}

/// A command result: a JSON payload (or a stream of them), a text summary,
/// and the table used for CSV.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub command: &'static str,
    pub json: JsonBody,
    pub text: String,
    pub table: Table,
    /// False when anything was not verified: a failed or skipped check, a
    /// table discrepancy, or a certificate that did not pass.
    pub verified: bool,
}

#[derive(Debug, Clone)]
pub enum JsonBody {
    /// One document.
    Single(Value),
    /// One document per line.
    Lines(Vec<Value>),
}

/// Serializes `value` as an object and stamps it with the schema and command.
pub fn stamped(command: &str, value: &impl Serialize) -> Result<Value, CliError> {
    let mut map = Map::new();
    map.insert("schema".into(), Value::from(SCHEMA));
    map.insert("command".into(), Value::from(command));
    match serde_json::to_value(value)? {
        Value::Object(fields) => map.extend(fields),
        other => {
            map.insert("result".into(), other);
        }
    }
    Ok(Value::Object(map))
}

impl Rendered {
    pub fn emit(&self, format: Format, out: &mut impl Write) -> Result<(), CliError> {
        match format {
            Format::Text => out.write_all(self.text.as_bytes())?,
            Format::Json => match &self.json {
                JsonBody::Single(v) => writeln!(out, "{}", serde_json::to_string_pretty(v)?)?,
                JsonBody::Lines(vs) => {
                    for v in vs {
                        writeln!(out, "{}", serde_json::to_string(v)?)?;
                    }
                }
            },
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.table.header)?;
                for row in &self.table.rows {
                    w.write_record(row)?;
                }
                out.write_all(&w.into_inner().map_err(|e| CliError::Io(e.into_error()))?)?;
            }
        }
        Ok(())
    }

    pub fn table_text(table: &Table) -> String {
        table.aligned()
    }
}
