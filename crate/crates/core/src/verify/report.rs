//! Structured verification reports.
//!
//! Every case records its inputs as strings, so a report replays
//! deterministically from (suite, seed). Theorem clauses produce pass/fail,
//! refinement dead-ends produce undecided, and open-problem observations are
//! report-only; a suite fails overall exactly when some case fails.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Undecided,
    ReportOnly,
}

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub inputs: BTreeMap<String, String>,
    pub expected: String,
    pub observed: String,
    pub outcome: Outcome,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub undecided: usize,
    pub report_only: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, seed: u64) -> Self {
        VerificationReport {
            suite: suite.into(),
            seed,
            cases: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, case: Case) {
        match case.outcome {
            Outcome::Pass => self.summary.pass += 1,
            Outcome::Fail => self.summary.fail += 1,
            Outcome::Undecided => self.summary.undecided += 1,
            Outcome::ReportOnly => self.summary.report_only += 1,
        }
        self.cases.push(case);
    }

    pub fn record(
        &mut self,
        inputs: BTreeMap<String, String>,
        expected: impl Into<String>,
        observed: impl Into<String>,
        outcome: Outcome,
    ) {
        self.push(Case {
            inputs,
            expected: expected.into(),
            observed: observed.into(),
            outcome,
        });
    }

    /// True when no case failed (undecided and report-only do not fail).
    pub fn overall_pass(&self) -> bool {
        self.summary.fail == 0
    }

    /// Fold another report's cases into this one, tagging them with the
    /// originating trial index.
    pub fn absorb(&mut self, trial: usize, other: VerificationReport) {
        for mut case in other.cases {
            case.inputs
                .insert("trial".to_string(), trial.to_string());
            self.push(case);
        }
    }

    /// First case value observed for a given key in inputs-free summary
    /// cases, used by explorers to surface headline numbers.
    pub fn observed_for(&self, expected_tag: &str) -> Option<&str> {
        self.cases
            .iter()
            .find(|c| c.expected == expected_tag)
            .map(|c| c.observed.as_str())
    }
}

/// Small builder for input maps.
pub fn inputs(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_tracks_outcomes() {
        let mut r = VerificationReport::new("demo", 7);
        r.record(inputs(&[("n", "1".into())]), "a", "a", Outcome::Pass);
        r.record(inputs(&[("n", "2".into())]), "b", "c", Outcome::Fail);
        r.record(inputs(&[]), "d", "?", Outcome::Undecided);
        r.record(inputs(&[]), "e", "42", Outcome::ReportOnly);
        assert_eq!(
            r.summary,
            Summary { pass: 1, fail: 1, undecided: 1, report_only: 1 }
        );
        assert!(!r.overall_pass());
        assert_eq!(r.observed_for("e"), Some("42"));
    }
}
