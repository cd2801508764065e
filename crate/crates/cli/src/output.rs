//! CSV, JSON and aligned-text emission of row tables.
//!
//! JSON is `{"meta": {...}, "rows": [...]}`; CSV carries one header line
//! with the row field names. Floats are written in shortest round-trip form.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::args::Format;
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub command: String,
    pub q: Vec<f64>,
    pub tol: f64,
    pub max_terms: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document<R> {
    pub meta: Meta,
    pub rows: Vec<R>,
}

pub fn csv_string<R: Serialize>(rows: &[R]) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(true)
        .from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// A CSV document re-laid as space-padded columns.
fn aligned(csv_text: &str) -> String {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(csv_text.as_bytes());
    let records: Vec<Vec<String>> = reader
        .records()
        .filter_map(|r| r.ok())
        .map(|r| r.iter().map(str::to_string).collect())
        .collect();
    let cols = records.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            records
                .iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in &records {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Renders `doc` in `format`.
pub fn render<R: Serialize>(doc: &Document<R>, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(doc).map_err(|e| CliError::Io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => csv_string(&doc.rows),
        Format::Text => Ok(aligned(&csv_string(&doc.rows)?)),
    }
}

/// Writes `text` to `path`, or to standard output.
pub fn emit(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    let io_err = |e: io::Error| CliError::Io(e.to_string());
    match path {
        Some(p) => File::create(p)
            .and_then(|mut f| f.write_all(text.as_bytes()))
            .map_err(io_err),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(io_err)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        name: &'static str,
        x: f64,
        y: Option<f64>,
    }

    #[test]
    fn csv_header_and_shortest_floats() {
        let rows = [
            Row {
                name: "a",
                x: 0.1,
                y: None,
            },
            Row {
                name: "bb",
                x: 1.0 / 3.0,
                y: Some(2.0),
            },
        ];
        let s = csv_string(&rows).unwrap();
        assert_eq!(s, "name,x,y\na,0.1,\nbb,0.3333333333333333,2.0\n");
        let t = aligned(&s);
        assert_eq!(t.lines().next().unwrap(), "name  x                   y");
    }
}
