//! Trace and verdict types, with their JSON encoding.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Alternating,
    Sporadic,
    Tits,
    Exceptional,
    #[serde(rename = "PSL")]
    Psl,
    #[serde(rename = "PSU")]
    Psu,
    #[serde(rename = "PSp")]
    Psp,
    #[serde(rename = "POmega")]
    POmega,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Alternating,
        Family::Sporadic,
        Family::Tits,
        Family::Exceptional,
        Family::Psl,
        Family::Psu,
        Family::Psp,
        Family::POmega,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Alternating => "Alternating",
            Family::Sporadic => "Sporadic",
            Family::Tits => "Tits",
            Family::Exceptional => "Exceptional",
            Family::Psl => "PSL",
            Family::Psu => "PSU",
            Family::Psp => "PSp",
            Family::POmega => "POmega",
        }
    }

    pub fn parse(text: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name().eq_ignore_ascii_case(text))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Eliminated,
    Confirming,
    NeedsManualLemma,
}

/// One candidate branch for the simple section K/H and what decided it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub family: Family,
    pub case: String,
    pub status: Status,
    pub witness: String,
    pub anchor: String,
    /// Set on confirming branches: the section K/H that survives.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub group: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckStatus {
    Passed,
    Failed,
    /// A structural theorem whose hypotheses the other checks establish.
    Cited,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub witness: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if passed { CheckStatus::Passed } else { CheckStatus::Failed },
            witness: witness.into(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationTrace {
    pub checks: Vec<Check>,
    pub entries: Vec<TraceEntry>,
}

impl EliminationTrace {
    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    /// Names of the sections on confirming branches, in trace order.
    pub fn confirming_groups(&self) -> Vec<String> {
        self.entries
            .iter()
            .filter(|e| e.status == Status::Confirming)
            .filter_map(|e| e.group.clone())
            .collect()
    }

    pub fn families(&self) -> Vec<Family> {
        let mut seen: Vec<Family> = self.entries.iter().map(|e| e.family).collect();
        seen.dedup();
        seen
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome")]
pub enum Outcome {
    IsomorphicToPSp4 { q: u64 },
    HypothesesNotMet { reason: String },
    NotApplicable { reason: String },
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::IsomorphicToPSp4 { .. } => "IsomorphicToPSp4",
            Outcome::HypothesesNotMet { .. } => "HypothesesNotMet",
            Outcome::NotApplicable { .. } => "NotApplicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    /// The q matched from the order, if any.
    pub q: Option<u64>,
    pub trace: Option<EliminationTrace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub outcome: String,
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub checks: Vec<Check>,
    pub entries: Vec<TraceEntry>,
}

impl Verdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self.outcome, Outcome::IsomorphicToPSp4 { .. })
    }

    pub fn to_json(&self) -> VerdictJson {
        let reason = match &self.outcome {
            Outcome::IsomorphicToPSp4 { .. } => None,
            Outcome::HypothesesNotMet { reason } | Outcome::NotApplicable { reason } => {
                Some(reason.clone())
            }
        };
        let trace = self.trace.clone().unwrap_or_default();
        VerdictJson {
            outcome: self.outcome.label().to_string(),
            q: self.q,
            reason,
            checks: trace.checks,
            entries: trace.entries,
        }
    }
}
