//! Record formatting and atomic output.

use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    #[default]
    Plain,
}

/// Rounds to 15 significant digits, the precision used in every output format.
pub fn sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().expect("formatted float parses")
}

/// A record that can be written as a CSV row, a JSON object or a plain-text line.
pub trait Record: Serialize {
    /// Column names, identical to the serialized field names.
    const HEADER: &'static [&'static str];

    fn plain_cells(&self) -> Vec<String>;
}

pub fn render<R: Record>(records: &[R], format: OutputFormat) -> io::Result<Vec<u8>> {
    match format {
        OutputFormat::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .has_headers(false)
                .from_writer(Vec::new());
            writer.write_record(R::HEADER).map_err(io::Error::other)?;
            for record in records {
                writer.serialize(record).map_err(io::Error::other)?;
            }
            writer
                .into_inner()
                .map_err(|e| io::Error::other(e.to_string()))
        }
        OutputFormat::Json => {
            let mut buf = serde_json::to_vec_pretty(records).map_err(io::Error::other)?;
            buf.push(b'\n');
            Ok(buf)
        }
        OutputFormat::Plain => Ok(plain_table(
            R::HEADER,
            records.iter().map(Record::plain_cells),
        )),
    }
}

fn plain_table<I: Iterator<Item = Vec<String>>>(header: &[&str], rows: I) -> Vec<u8> {
    let rows: Vec<Vec<String>> = rows.collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: &mut dyn Iterator<Item = &str>, out: &mut String| {
        let parts: Vec<String> = cells
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied(), &mut out);
    for row in &rows {
        line(&mut row.iter().map(String::as_str), &mut out);
    }
    out.into_bytes()
}

/// Writes `bytes` to `path` through a temporary file in the same directory,
/// renamed into place once complete.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
