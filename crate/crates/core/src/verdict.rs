//! Outcome records produced by every verification routine.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    PreconditionError,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::PreconditionError => "precondition-error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Detail {
    pub label: String,
    pub passed: bool,
    pub value: String,
}

/// Invariant: `status == Fail` implies `counterexample.is_some()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerdictReport {
    pub check: String,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    pub details: Vec<Detail>,
    pub counterexample: Option<String>,
}

impl VerdictReport {
    pub fn new(check: &str, params: &[(&str, i64)]) -> Self {
        VerdictReport {
            check: check.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            status: Status::Pass,
            details: Vec::new(),
            counterexample: None,
        }
    }

    pub fn precondition_error(check: &str, params: &[(&str, i64)], message: impl Into<String>) -> Self {
        let mut r = Self::new(check, params);
        r.status = Status::PreconditionError;
        r.details.push(Detail { label: "precondition".into(), passed: false, value: message.into() });
        r
    }

    /// Appends a detail line; the first failing line becomes the counterexample.
    pub fn record(&mut self, label: impl Into<String>, passed: bool, value: impl Into<String>) {
        let label = label.into();
        let value = value.into();
        if !passed {
            self.fail_with(alloc::format!("{label}: {value}"));
        }
        self.details.push(Detail { label, passed, value });
    }

    /// Records a failure with an explicit witness.
    pub fn fail_with(&mut self, witness: impl Into<String>) {
        if self.status == Status::Pass {
            self.status = Status::Fail;
        }
        if self.counterexample.is_none() {
            self.counterexample = Some(witness.into());
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Folds another report's details into this one under a prefix.
    pub fn absorb(&mut self, prefix: &str, other: VerdictReport) {
        if other.status == Status::PreconditionError && self.status != Status::Fail {
            self.status = Status::PreconditionError;
        }
        for d in other.details {
            self.record(alloc::format!("{prefix}{}", d.label), d.passed, d.value);
        }
        if let Some(c) = other.counterexample {
            if self.counterexample.is_none() {
                self.counterexample = Some(alloc::format!("{prefix}{c}"));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_sets_counterexample() {
        let mut r = VerdictReport::new("demo", &[("p", 3)]);
        r.record("ok", true, "1");
        assert!(r.passed());
        r.record("bad", false, "xi");
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counterexample.as_deref(), Some("bad: xi"));
        r.record("bad2", false, "eta");
        assert_eq!(r.counterexample.as_deref(), Some("bad: xi"));
    }
}
