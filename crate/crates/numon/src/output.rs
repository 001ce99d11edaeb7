//! Output documents and their human, JSON and CSV renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::Failure;

pub const SCHEMA_VERSION: &str = "nm/1";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Json,
    Csv,
}

/// Rows for CSV output; header first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// The JSON envelope shared by every command.
#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub schema_version: &'static str,
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Value,
    pub timings: BTreeMap<String, u64>,
}

/// A finished command: its document, a human rendering, an optional table,
/// and whether every check it ran passed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub document: Document,
    pub human: String,
    pub table: Option<Table>,
    pub ok: bool,
}

impl Outcome {
    pub fn render(&self, format: Format) -> Result<String, Failure> {
        match format {
            Format::Human => Ok(self.human.clone()),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.document).expect("documents serialize");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => match &self.table {
                Some(t) => Ok(t.to_csv()),
                None => Err(Failure::Usage(format!(
                    "command {:?} has no tabular output; use --format human or json",
                    self.document.command
                ))),
            },
        }
    }

    /// 0 on success, 3 when a verification failed.
    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            3
        }
    }
}

/// Collects per-phase wall-clock timings in milliseconds.
#[derive(Debug, Default)]
pub struct Timer {
    phases: BTreeMap<String, u64>,
}

impl Timer {
    pub fn phase<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        *self.phases.entry(name.to_string()).or_insert(0) += start.elapsed().as_millis() as u64;
        out
    }

    pub fn finish(self) -> BTreeMap<String, u64> {
        self.phases
    }
}

/// Big integers go into JSON as numbers when they fit in 64 bits and as
/// decimal strings otherwise.
pub fn big_value<B: std::fmt::Display>(b: &B) -> Value
where
    for<'a> u64: TryFrom<&'a B>,
{
    match u64::try_from(b) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(b.to_string()),
    }
}

/// `key: value` lines with aligned keys.
pub fn key_values(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in pairs {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}

pub fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
