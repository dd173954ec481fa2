use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Replayable evidence attached to a failing verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub summary: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, i64>,
}

impl Witness {
    pub fn new(summary: impl Into<String>) -> Self {
        Witness {
            summary: summary.into(),
            ..Default::default()
        }
    }

    pub fn factor(mut self, f: impl Into<String>) -> Self {
        self.factors.push(f.into());
        self
    }

    pub fn count(mut self, key: impl Into<String>, v: i64) -> Self {
        self.counts.insert(key.into(), v);
        self
    }
}

/// Outcome of checking a property of an infinite word on a finite prefix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    HoldsUpTo { horizon: usize },
    FailsAt { n: usize, witness: Witness },
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::HoldsUpTo { .. })
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::FailsAt { .. })
    }

    pub fn inconclusive(reason: impl Into<String>) -> Self {
        Verdict::Inconclusive {
            reason: reason.into(),
        }
    }

    pub fn fails_at(n: usize, witness: Witness) -> Self {
        Verdict::FailsAt { n, witness }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::FailsAt { witness, .. } => Some(witness),
            _ => None,
        }
    }

    /// `Some(true)` for holds, `Some(false)` for fails.
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::HoldsUpTo { .. } => Some(true),
            Verdict::FailsAt { .. } => Some(false),
            Verdict::Inconclusive { .. } => None,
        }
    }

    /// Downgrades a failure that a longer prefix could still repair.
    pub fn non_monotone(self, saturated: bool) -> Self {
        match self {
            Verdict::FailsAt { n, witness } if !saturated => Verdict::inconclusive(format!(
                "prefix not saturated; tentative failure at n = {n}: {}",
                witness.summary
            )),
            v => v,
        }
    }

    pub fn short(&self) -> String {
        match self {
            Verdict::HoldsUpTo { horizon } => format!("holds<={horizon}"),
            Verdict::FailsAt { n, .. } => format!("fails@{n}"),
            Verdict::Inconclusive { .. } => "inconclusive".into(),
        }
    }
}
