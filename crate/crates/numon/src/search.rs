//! Parallel, resumable Kunz-coordinate search.

use std::collections::BTreeSet;
use std::path::PathBuf;

use numon_core::search::{scan_unit, work_units, SearchResult, UnitResult, DEFAULT_UNIT_DEPTH};
use rayon::prelude::*;

use crate::checkpoint::{Checkpoint, Header, UnitRecord};
use crate::Failure;

/// `K = 4` up to multiplicity 12, `3` up to 15, `2` beyond.
pub fn default_kunz_bound(m: u64) -> u64 {
    match m {
        0..=12 => 4,
        13..=15 => 3,
        _ => 2,
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub e: u64,
    pub m: u64,
    pub kunz_bound: u64,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub unit_depth: usize,
    pub checkpoint: Option<PathBuf>,
}

impl SearchConfig {
    pub fn new(e: u64, m: u64, kunz_bound: u64) -> Self {
        Self { e, m, kunz_bound, jobs: 1, unit_depth: DEFAULT_UNIT_DEPTH, checkpoint: None }
    }
}

#[derive(Clone, Debug)]
pub struct SearchRun {
    pub result: SearchResult,
    pub units_total: usize,
    pub units_resumed: usize,
}

pub fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Resource(format!("cannot start worker pool: {e}")))
}

pub fn run_search(cfg: &SearchConfig) -> Result<SearchRun, Failure> {
    if cfg.m < 2 || cfg.e >= cfg.m || cfg.e == 0 {
        return Err(Failure::Usage(format!("need 0 < e < m and m >= 2, got e = {}, m = {}", cfg.e, cfg.m)));
    }
    if cfg.kunz_bound == 0 {
        return Err(Failure::Usage("kunz bound must be positive".into()));
    }
    let units = work_units(cfg.m, cfg.kunz_bound, cfg.unit_depth);
    let header = Header::new(cfg.e, cfg.m, cfg.kunz_bound, cfg.unit_depth, units.len());
    let (checkpoint, done) = match &cfg.checkpoint {
        Some(path) => {
            let (c, done) = Checkpoint::open(path, &header)?;
            (Some(c), done)
        }
        None => (None, Vec::new()),
    };
    let mut merged = UnitResult::default();
    let mut finished = BTreeSet::new();
    for record in &done {
        if finished.insert(record.prefix.clone()) {
            merged = merged.merge(record.to_result(cfg.m)?);
        }
    }
    let pending: Vec<&Vec<u64>> = units.iter().filter(|p| !finished.contains(*p)).collect();
    let pool = thread_pool(cfg.jobs)?;
    let fresh = pool.install(|| {
        pending
            .par_iter()
            .map(|prefix| {
                let r = scan_unit(cfg.e, cfg.m, cfg.kunz_bound, prefix);
                if let Some(c) = &checkpoint {
                    c.record(&UnitRecord::from_result(prefix, &r))?;
                }
                Ok::<_, Failure>(r)
            })
            .try_reduce(UnitResult::default, |a, b| Ok(a.merge(b)))
    })?;
    merged = merged.merge(fresh);
    Ok(SearchRun {
        result: SearchResult::from_units(cfg.e, cfg.m, cfg.kunz_bound, merged, true),
        units_total: units.len(),
        units_resumed: finished.len(),
    })
}
