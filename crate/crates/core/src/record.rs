use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    NotChecked,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::NotChecked => "not-checked",
        })
    }
}

/// Outcome of one check on one group. A failing record always carries a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub subject: String,
    pub outcome: Outcome,
    pub witnesses: Vec<String>,
    pub numbers: BTreeMap<String, i64>,
}

impl VerificationRecord {
    pub fn pass(subject: impl Into<String>) -> Self {
        Self {
            subject: subject.into(),
            outcome: Outcome::Pass,
            witnesses: Vec::new(),
            numbers: BTreeMap::new(),
        }
    }

    pub fn not_checked(subject: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            outcome: Outcome::NotChecked,
            witnesses: vec![reason.into()],
            ..Self::pass(subject)
        }
    }

    /// Pass when `witnesses` is empty, fail otherwise.
    pub fn from_witnesses(subject: impl Into<String>, witnesses: Vec<String>) -> Self {
        let outcome = if witnesses.is_empty() {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        Self {
            outcome,
            witnesses,
            ..Self::pass(subject)
        }
    }

    pub fn check(subject: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(subject)
        } else {
            Self::from_witnesses(subject, vec![witness()])
        }
    }

    pub fn with_number(mut self, name: &str, value: impl TryInto<i64>) -> Self {
        let value = value.try_into().unwrap_or(i64::MAX);
        self.numbers.insert(name.to_string(), value);
        self
    }

    pub fn is_fail(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    /// `subject TAB outcome TAB name=value,...`
    pub fn line(&self) -> String {
        let numbers: Vec<String> = self
            .numbers
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!("{}\t{}\t{}", self.subject, self.outcome, numbers.join(","))
    }
}
