use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::{Serialize, Serializer};

use crate::error::LabResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Jsonl,
}

/// `x` rounded to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.11e}", x).parse().expect("formatted float parses")
}

pub fn sig12<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig(*x))
}

pub fn write_table<T: Serialize, W: Write>(rows: &[T], format: Format, w: W) -> LabResult<()> {
    match format {
        Format::Csv => {
            let mut wr = csv::Writer::from_writer(w);
            for r in rows {
                wr.serialize(r)?;
            }
            wr.flush()?;
        }
        Format::Json => {
            let mut w = w;
            serde_json::to_writer_pretty(&mut w, rows)?;
            writeln!(w)?;
        }
        Format::Jsonl => {
            let mut w = w;
            for r in rows {
                serde_json::to_writer(&mut w, r)?;
                writeln!(w)?;
            }
        }
    }
    Ok(())
}

pub fn write_table_to_path<T: Serialize>(rows: &[T], format: Format, path: &Path) -> LabResult<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_table(rows, format, &mut w)?;
    w.flush()?;
    Ok(())
}

/// One `key=value` line per row.
pub fn summary_lines<T: Serialize>(rows: &[T]) -> LabResult<Vec<String>> {
    rows.iter()
        .map(|r| {
            let v = serde_json::to_value(r)?;
            let fields = v.as_object().map(|o| {
                o.iter()
                    .map(|(k, v)| match v {
                        serde_json::Value::String(s) => format!("{k}={s}"),
                        other => format!("{k}={other}"),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            });
            Ok(fields.unwrap_or_else(|| v.to_string()))
        })
        .collect()
}

pub fn print_summary<T: Serialize>(rows: &[T]) -> LabResult<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for line in summary_lines(rows)? {
        writeln!(out, "{line}")?;
    }
    Ok(())
}
