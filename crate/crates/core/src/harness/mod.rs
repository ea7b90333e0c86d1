//! One executable check per supported statement.
//!
//! Every check verifies its statement's hypotheses mechanically on the given
//! instance (or discharges them symbolically where a one-line argument
//! applies, e.g. principal ideals are free over a domain), evaluates the
//! conclusion exactly, and emits a [`CheckReport`]. FAIL is reserved for an
//! exact refutation with a re-checkable witness; hypotheses that do not hold
//! yield HYPOTHESIS_FAILED, and instances outside a statement's scope yield
//! SKIPPED. Bound-limited uncertainty surfaces as a hard error, never as a
//! verdict.

mod checks;
mod sweep;

pub use checks::*;
pub use sweep::{
    explore_question_hyp, explore_question_qu2, ord_by_power_membership, random_integral_ideal,
    random_nonprincipal_ideal, registered_statements, run_statements, run_statements_lossy,
    statement_matches, HypRow, Qu2Row, SweepConfig,
};

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "HYPOTHESIS_FAILED")]
    HypothesisFailed,
    #[serde(rename = "SKIPPED")]
    Skipped,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::HypothesisFailed => "HYPOTHESIS_FAILED",
            Verdict::Skipped => "SKIPPED",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum HypothesisStatus {
    /// Mechanically checked on the instance, exactly or up to the bound.
    Verified {
        bound: Option<i64>,
    },
    /// Discharged by a symbolic argument rather than computation.
    Symbolic,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Hypothesis {
    pub name: String,
    #[serde(flatten)]
    pub status: HypothesisStatus,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub label: String,
    pub value: String,
}

/// A statement instantiated on concrete data: which hypotheses were checked
/// and how, the verdict, and enough witnesses to recheck it by hand.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub statement_id: String,
    pub instance: String,
    pub hypotheses: Vec<Hypothesis>,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<i64>,
}

impl CheckReport {
    pub fn new(statement_id: impl Into<String>, instance: impl Into<String>) -> Self {
        Self {
            statement_id: statement_id.into(),
            instance: instance.into(),
            hypotheses: Vec::new(),
            verdict: Verdict::Skipped,
            witnesses: Vec::new(),
            degree_bound: None,
        }
    }

    pub fn hypothesis(mut self, name: impl Into<String>, status: HypothesisStatus) -> Self {
        self.hypotheses.push(Hypothesis {
            name: name.into(),
            status,
        });
        self
    }

    pub fn witness(mut self, label: impl Into<String>, value: impl ToString) -> Self {
        self.witnesses.push(Witness {
            label: label.into(),
            value: value.to_string(),
        });
        self
    }

    pub fn bound(mut self, d: i64) -> Self {
        self.degree_bound = Some(d);
        self
    }

    pub fn verdict(mut self, v: Verdict) -> Self {
        self.verdict = v;
        self
    }

    /// One CSV row: statement, instance, verdict, bound.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.statement_id,
            self.instance.replace(',', ";"),
            self.verdict,
            self.degree_bound.map_or(String::new(), |d| d.to_string())
        )
    }
}

pub const CSV_HEADER: &str = "statement_id,instance,verdict,bound";
