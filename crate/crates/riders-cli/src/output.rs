//! Output document assembly: one JSON object (or a CSV table) per
//! command, with arbitrary-precision counts carried as decimal strings.

use std::fs;
use std::path::Path;

use riders::BigRational;
use serde_json::{json, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A rendered command result: the JSON fields plus a CSV alternative.
pub struct OutputDoc {
    pub query: Value,
    pub method: String,
    pub result: Value,
    pub errata_notes: Vec<String>,
    pub csv: String,
}

impl OutputDoc {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let doc = json!({
                    "query": self.query,
                    "method": self.method,
                    "result": self.result,
                    "errata_notes": self.errata_notes,
                });
                let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
                text.push('\n');
                text
            }
            Format::Csv => self.csv.clone(),
        }
    }
}

/// Render rows as CSV with a header. Fields never contain commas: counts
/// are decimal digits and coefficient lists are joined with semicolons.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Exact rational as an unambiguous "numerator/denominator" string.
pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn write_rendered(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
