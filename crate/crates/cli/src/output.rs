use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

/// One record per invocation. Top-level keys are emitted in field order;
/// nested objects have their keys sorted.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub result: Value,
    pub elapsed_ms: u64,
}

/// What a command produced, ready for any of the output formats.
#[derive(Debug, Default)]
pub struct Rendered {
    pub result: Value,
    pub text: String,
    /// First row is the header.
    pub csv: Vec<Vec<String>>,
    /// `Some(false)` for a verification that ran and failed.
    pub verdict: Option<bool>,
}

pub fn emit(format: Format, record: &OutputRecord, rendered: &Rendered) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => {
            serde_json::to_writer(&mut out, record)?;
            writeln!(out)?;
        }
        Format::Text => {
            out.write_all(rendered.text.as_bytes())?;
            if !rendered.text.ends_with('\n') {
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in &rendered.csv {
                w.write_record(row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn row<I, S>(cells: I) -> Vec<String>
where
    I: IntoIterator<Item = S>,
    S: ToString,
{
    cells.into_iter().map(|c| c.to_string()).collect()
}
