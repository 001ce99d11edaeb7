//! Line-delimited JSON checkpoints for the Kunz search.
//!
//! The first line is a header naming the search parameters; every further
//! line records one finished work unit. A truncated last line (from an
//! interrupted write) is dropped on reopen.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use numon_core::search::{Best, KunzVector, UnitResult};
use serde::{Deserialize, Serialize};

use crate::output::SCHEMA_VERSION;
use crate::Failure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub schema_version: String,
    pub e: u64,
    pub m: u64,
    pub kunz_bound: u64,
    pub unit_depth: usize,
    pub units: usize,
}

impl Header {
    pub fn new(e: u64, m: u64, kunz_bound: u64, unit_depth: usize, units: usize) -> Self {
        Self { schema_version: SCHEMA_VERSION.to_string(), e, m, kunz_bound, unit_depth, units }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestRecord {
    pub value: usize,
    pub kunz: Vec<u64>,
    pub generators: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitRecord {
    pub prefix: Vec<u64>,
    pub scanned: u64,
    pub matching: u64,
    pub best_rho: Option<BestRecord>,
    pub best_type: Option<BestRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Record {
    Header(Header),
    Unit(UnitRecord),
}

fn best_to_record(b: &Best) -> BestRecord {
    BestRecord {
        value: b.value,
        kunz: b.witness.coords.clone(),
        generators: b.witness.to_monoid().generators().to_vec(),
    }
}

fn best_from_record(m: u64, r: &BestRecord) -> Result<Best, Failure> {
    let witness = KunzVector { modulus: m, coords: r.kunz.clone() };
    if !witness.is_valid() {
        return Err(Failure::Usage("checkpoint holds an invalid Kunz vector".into()));
    }
    Ok(Best { value: r.value, witness })
}

impl UnitRecord {
    pub fn from_result(prefix: &[u64], r: &UnitResult) -> Self {
        Self {
            prefix: prefix.to_vec(),
            scanned: r.scanned,
            matching: r.matching,
            best_rho: r.best_rho.as_ref().map(best_to_record),
            best_type: r.best_type.as_ref().map(best_to_record),
        }
    }

    pub fn to_result(&self, m: u64) -> Result<UnitResult, Failure> {
        Ok(UnitResult {
            scanned: self.scanned,
            matching: self.matching,
            best_rho: self.best_rho.as_ref().map(|b| best_from_record(m, b)).transpose()?,
            best_type: self.best_type.as_ref().map(|b| best_from_record(m, b)).transpose()?,
        })
    }
}

/// An open checkpoint file accepting unit records from many threads.
pub struct Checkpoint {
    path: PathBuf,
    file: Mutex<File>,
}

impl Checkpoint {
    /// Opens or creates the checkpoint. Returns the units already recorded.
    /// Fails when an existing file was written for other parameters.
    pub fn open(path: &Path, header: &Header) -> Result<(Self, Vec<UnitRecord>), Failure> {
        let mut done = Vec::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path)?);
            let mut lines = reader.lines();
            match lines.next().transpose()? {
                None => {}
                Some(first) => {
                    let found: Record = serde_json::from_str(&first)
                        .map_err(|e| Failure::Usage(format!("unreadable checkpoint header: {e}")))?;
                    if found != Record::Header(header.clone()) {
                        return Err(Failure::Usage(format!(
                            "checkpoint {} was written for different search parameters",
                            path.display()
                        )));
                    }
                    for line in lines {
                        let line = line?;
                        match serde_json::from_str::<Record>(&line) {
                            Ok(Record::Unit(u)) => done.push(u),
                            Ok(Record::Header(_)) => {
                                return Err(Failure::Usage("checkpoint has a second header".into()))
                            }
                            Err(_) => break,
                        }
                    }
                }
            }
        }
        // rewrite without any torn tail, then append
        let tmp = path.with_extension("tmp");
        {
            let mut f = File::create(&tmp)?;
            writeln!(f, "{}", serde_json::to_string(&Record::Header(header.clone())).expect("serializable"))?;
            for u in &done {
                writeln!(f, "{}", serde_json::to_string(&Record::Unit(u.clone())).expect("serializable"))?;
            }
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        let file = OpenOptions::new().append(true).open(path)?;
        Ok((Self { path: path.to_path_buf(), file: Mutex::new(file) }, done))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn record(&self, unit: &UnitRecord) -> Result<(), Failure> {
        let line = serde_json::to_string(&Record::Unit(unit.clone())).expect("serializable");
        let mut f = self.file.lock().expect("checkpoint lock");
        writeln!(f, "{line}")?;
        f.flush()?;
        Ok(())
    }
}
