//! Structured verification records.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One named comparison inside a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub computed: Value,
    pub oracle: Value,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(name: &str, computed: impl Serialize, oracle: impl Serialize) -> Self {
        let computed = serde_json::to_value(computed).expect("serializable");
        let oracle = serde_json::to_value(oracle).expect("serializable");
        let pass = computed == oracle;
        CheckRecord { name: name.to_string(), computed, oracle, pass }
    }

    /// A record whose verdict is decided by the caller.
    pub fn with_verdict(name: &str, computed: impl Serialize, oracle: impl Serialize, pass: bool) -> Self {
        CheckRecord {
            name: name.to_string(),
            computed: serde_json::to_value(computed).expect("serializable"),
            oracle: serde_json::to_value(oracle).expect("serializable"),
            pass,
        }
    }
}

/// Result of one verification suite on one instance `(k, ξ[, n])`.
///
/// `computed` and `oracle` carry the headline comparison; `checks` lists
/// every sub-check, and `pass` holds iff all of them pass.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub k: usize,
    pub n: Option<usize>,
    pub xi: Vec<usize>,
    pub check: String,
    pub degree_range: [u32; 2],
    pub computed: Value,
    pub oracle: Value,
    pub pass: bool,
    pub millis: Option<u64>,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(check: &str, k: usize, n: Option<usize>, xi: &[usize], degree_range: [u32; 2], checks: Vec<CheckRecord>) -> Self {
        let (computed, oracle) = checks
            .first()
            .map_or((Value::Null, Value::Null), |c| (c.computed.clone(), c.oracle.clone()));
        let pass = checks.iter().all(|c| c.pass);
        VerificationReport {
            k,
            n,
            xi: xi.to_vec(),
            check: check.to_string(),
            degree_range,
            computed,
            oracle,
            pass,
            millis: None,
            checks,
        }
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
