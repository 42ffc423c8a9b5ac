//! The table of radicands with 5-class group of type (5,5), and its check
//! against the classifier.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::classify::{self, RadicandCase};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub n: u64,
    /// 5-part of the class number of k.
    pub h_k5: u64,
    /// Invariants of the 5-class group.
    pub group_type: [u64; 2],
    /// Rank of the group of ambiguous classes.
    pub rank_ambiguous: u32,
    /// How the row is written, e.g. "251^2".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub display: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anomaly {
    pub n: u64,
    pub note: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    KnownAnomaly,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowResult {
    pub n: u64,
    pub case: Option<RadicandCase>,
    pub outcome: Outcome,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub anomaly: usize,
    pub fail: usize,
    pub rows: Vec<RowResult>,
}

impl Summary {
    fn push(&mut self, row: RowResult) {
        match row.outcome {
            Outcome::Pass => self.pass += 1,
            Outcome::KnownAnomaly => self.anomaly += 1,
            Outcome::Fail => self.fail += 1,
        }
        self.rows.push(row);
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))
}

pub fn load_fixtures(path: &Path) -> Result<Vec<FixtureEntry>> {
    read_json(path)
}

pub fn load_anomalies(path: &Path) -> Result<Vec<Anomaly>> {
    read_json(path)
}

/// Every entry must match one of the three cases, except listed anomalies,
/// which must not.
pub fn verify_fixtures(entries: &[FixtureEntry], anomalies: &[Anomaly]) -> Summary {
    let mut summary = Summary::default();
    for entry in entries {
        let listed = anomalies.iter().any(|a| a.n == entry.n);
        let row = match classify::classify_radicand(entry.n) {
            Err(e) => RowResult {
                n: entry.n,
                case: None,
                outcome: Outcome::Fail,
                detail: Some(e.to_string()),
            },
            Ok(c) => {
                let matched = c.case != RadicandCase::NoMatch;
                let outcome = match (matched, listed) {
                    (true, false) => Outcome::Pass,
                    (false, true) => Outcome::KnownAnomaly,
                    _ => Outcome::Fail,
                };
                let detail = match (matched, listed) {
                    (true, true) => Some("listed as an anomaly but matches a case".to_string()),
                    (false, false) => c.reason.clone(),
                    _ => None,
                };
                RowResult {
                    n: entry.n,
                    case: Some(c.case),
                    outcome,
                    detail,
                }
            }
        };
        summary.push(row);
    }
    summary
}
