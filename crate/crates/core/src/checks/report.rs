use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    /// Hypotheses not met; the witness says why.
    Skipped,
    /// Gin trials disagreed.
    Inconclusive,
    Fail,
}

/// Result of one check on one instance. Serialized as a single JSON line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub statement_id: String,
    pub instance: String,
    pub outcome: Outcome,
    pub passed: bool,
    pub witness: Option<Value>,
    pub seeds: Vec<u64>,
}

impl CheckReport {
    pub fn pass(id: &str, instance: impl Into<String>, seeds: Vec<u64>) -> Self {
        Self::build(id, instance, Outcome::Pass, None, seeds)
    }

    pub fn fail(id: &str, instance: impl Into<String>, witness: Value, seeds: Vec<u64>) -> Self {
        Self::build(id, instance, Outcome::Fail, Some(witness), seeds)
    }

    pub fn skipped(id: &str, instance: impl Into<String>, witness: Value, seeds: Vec<u64>) -> Self {
        Self::build(id, instance, Outcome::Skipped, Some(witness), seeds)
    }

    pub fn inconclusive(id: &str, instance: impl Into<String>, witness: Value, seeds: Vec<u64>) -> Self {
        Self::build(id, instance, Outcome::Inconclusive, Some(witness), seeds)
    }

    /// Pass if `ok`, otherwise fail with `witness`.
    pub fn verdict(id: &str, instance: impl Into<String>, ok: bool, witness: Value, seeds: Vec<u64>) -> Self {
        if ok {
            Self::pass(id, instance, seeds)
        } else {
            Self::fail(id, instance, witness, seeds)
        }
    }

    fn build(id: &str, instance: impl Into<String>, outcome: Outcome, witness: Option<Value>, seeds: Vec<u64>) -> Self {
        CheckReport {
            statement_id: id.to_string(),
            instance: instance.into(),
            outcome,
            passed: outcome == Outcome::Pass,
            witness,
            seeds,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Counts per outcome over a batch of reports.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.outcome {
                Outcome::Pass => s.pass += 1,
                Outcome::Fail => s.fail += 1,
                Outcome::Inconclusive => s.inconclusive += 1,
                Outcome::Skipped => s.skipped += 1,
            }
        }
        s
    }

    /// Fail dominates inconclusive, which dominates pass; skips are neutral.
    pub fn overall(&self) -> Outcome {
        if self.fail > 0 {
            Outcome::Fail
        } else if self.inconclusive > 0 {
            Outcome::Inconclusive
        } else {
            Outcome::Pass
        }
    }
}

/// Runs `check` with `seed`; an inconclusive result is retried once with a
/// fresh seed.
pub fn with_retry(seed: u64, check: impl Fn(u64) -> CheckReport) -> CheckReport {
    let first = check(seed);
    if first.outcome != Outcome::Inconclusive {
        return first;
    }
    check(seed.wrapping_add(0x9E37_79B9))
}
