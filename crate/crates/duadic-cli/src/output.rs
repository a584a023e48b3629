//! Report sinks: text, JSON, or CSV, to stdout or a file.

use std::io::Write;

use anyhow::{Context, Result};

use crate::{CommonOpts, Format};

/// Emits one of the prepared renderings according to the options.
pub fn emit(common: &CommonOpts, text: String, json: serde_json::Value, csv: Vec<Vec<String>>) -> Result<()> {
    let payload = match common.format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&json)?,
        Format::Csv => render_csv(&csv)?,
    };
    match &common.out {
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{payload}")?;
        }
        Some(path) => {
            std::fs::write(path, payload + "\n")
                .with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}

fn render_csv(rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner()?;
    Ok(String::from_utf8(bytes)?.trim_end().to_string())
}

pub fn classes_string(s: &[u32]) -> String {
    let inner: Vec<String> = s.iter().map(|c| c.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}
