use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A measured finding for a claim under audit; neither confirms nor
    /// refutes it.
    Report,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Report => "report",
        })
    }
}

/// Outcome of one checked claim. `details` is a sorted JSON object of
/// measured quantities; `witnesses` lists concrete elements backing the
/// status.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim_id: String,
    pub status: Status,
    pub details: Map<String, Value>,
    pub witnesses: Vec<String>,
}

impl Verdict {
    pub fn new(claim_id: impl Into<String>, status: Status) -> Self {
        Verdict { claim_id: claim_id.into(), status, details: Map::new(), witnesses: Vec::new() }
    }

    pub fn pass_if(claim_id: impl Into<String>, ok: bool) -> Self {
        Self::new(claim_id, if ok { Status::Pass } else { Status::Fail })
    }

    pub fn detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    pub fn witness(mut self, w: impl fmt::Display) -> Self {
        self.witnesses.push(w.to_string());
        self
    }

    pub fn witnesses<I, W>(mut self, ws: I) -> Self
    where
        I: IntoIterator<Item = W>,
        W: fmt::Display,
    {
        self.witnesses.extend(ws.into_iter().map(|w| w.to_string()));
        self
    }

    /// Downgrades `fail` to `report` for claims under audit.
    pub fn audited(mut self) -> Self {
        if self.status == Status::Fail {
            self.status = Status::Report;
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.details.get(key)
    }
}
