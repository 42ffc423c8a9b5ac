//! Classification of every radicand in a range, in parallel, with output in
//! increasing order of n whatever the number of workers.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{self, RadicandCase};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub n: u64,
    pub case: RadicandCase,
}

/// (n, case) for every 5th-power-free n in lo..=hi. Non-5th-power-free n are
/// skipped; any other classification error aborts the scan.
pub fn scan_range(lo: u64, hi: u64, jobs: usize) -> Result<Vec<ScanEntry>> {
    if lo < 2 || lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let results: Vec<Result<Option<ScanEntry>>> = pool.install(|| {
        (lo..=hi)
            .into_par_iter()
            .map(|n| match classify::classify_radicand(n) {
                Ok(c) => Ok(Some(ScanEntry { n, case: c.case })),
                Err(Error::NotFifthPowerFree { .. }) => Ok(None),
                Err(e) => Err(e),
            })
            .collect()
    });
    let mut out = Vec::with_capacity(results.len());
    for r in results {
        if let Some(entry) = r? {
            out.push(entry);
        }
    }
    Ok(out)
}

/// One line per entry, "n<TAB>case".
pub fn render_scan(entries: &[ScanEntry]) -> String {
    let mut s = String::with_capacity(entries.len() * 16);
    for e in entries {
        s.push_str(&e.n.to_string());
        s.push('\t');
        s.push_str(e.case.name());
        s.push('\n');
    }
    s
}
