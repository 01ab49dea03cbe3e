//! Pass/fail reports shared by the verification routines.

use serde::{Deserialize, Serialize};

/// Number of cases examined and the first failures found.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

const MAX_FAILURES: usize = 32;

impl CheckReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, msg: String) {
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(msg);
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        for f in other.failures {
            self.fail(f);
        }
    }
}
