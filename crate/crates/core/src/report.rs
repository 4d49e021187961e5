//! Run reports shared by the command-line tool and the test suites.

use std::time::Duration;

use serde::{Deserialize, Serialize};

/// One named pass/fail check with its exact certificates.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Rationals rendered as strings, or whole JSON documents.
    pub certificate: serde_json::Value,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, certificate: impl Serialize) -> Self {
        Check {
            name: name.into(),
            passed,
            certificate: serde_json::to_value(certificate).expect("certificates serialize"),
        }
    }
}

/// Everything needed to replay a run. Replaying `(command, parameters, seed)`
/// reproduces `checks` exactly; only `wall_time_ms` varies.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: serde_json::Value,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    pub wall_time_ms: Option<u64>,
}

impl RunReport {
    pub fn new(
        command: impl Into<String>,
        parameters: serde_json::Value,
        seed: Option<u64>,
    ) -> Self {
        RunReport {
            command: command.into(),
            parameters,
            seed,
            checks: Vec::new(),
            wall_time_ms: None,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn with_wall_time(mut self, d: Duration) -> Self {
        self.wall_time_ms = Some(u64::try_from(d.as_millis()).unwrap_or(u64::MAX));
        self
    }

    /// The report without its timing field, for byte-level comparisons.
    pub fn untimed(&self) -> RunReport {
        RunReport {
            wall_time_ms: None,
            ..self.clone()
        }
    }
}
