//! Output assembly: one in-memory report per command, rendered as JSON, CSV,
//! or a plain-text table.
//!
//! Big integers are always rendered as decimal strings; JSON consumers with
//! 64-bit number limits must never corrupt a determinant.

use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// The pieces every subcommand produces; rendering picks one view.
pub struct Report {
    pub payload: Value,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
    pub text: String,
}

impl Report {
    pub fn render(&self, format: Format, command: &str, timing_ms: u128) -> String {
        match format {
            Format::Json => {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": command,
                    "payload": self.payload,
                    "timing_ms": timing_ms,
                });
                let mut out = serde_json::to_string_pretty(&doc).expect("document serializes");
                out.push('\n');
                out
            }
            // CSV output carries no timing metadata so identical runs are
            // byte-identical.
            Format::Csv => {
                let mut out = String::new();
                out.push_str(&csv_line(
                    &self.csv_header.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                ));
                for row in &self.csv_rows {
                    out.push_str(&csv_line(row));
                }
                out
            }
            Format::Text => format!("{}elapsed: {timing_ms} ms\n", self.text),
        }
    }
}

/// RFC 4180 line: fields holding commas, quotes, or newlines get quoted.
fn csv_line(fields: &[String]) -> String {
    let mut line = String::new();
    for (i, field) in fields.iter().enumerate() {
        if i > 0 {
            line.push(',');
        }
        if field.contains(',') || field.contains('"') || field.contains('\n') {
            line.push('"');
            line.push_str(&field.replace('"', "\"\""));
            line.push('"');
        } else {
            line.push_str(field);
        }
    }
    line.push_str("\r\n");
    line
}

/// Left-padded column rendering for the text tables.
pub fn pad(value: &str, width: usize) -> String {
    format!("{value:>width$}")
}
