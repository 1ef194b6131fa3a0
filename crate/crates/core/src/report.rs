//! Named pass/fail records produced by the verification routines.

use serde::Serialize;

/// Outcome of one exact check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Counterexample or summary; empty when there is nothing to add.
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed: true,
            detail: String::new(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed: ok,
            detail: detail.into(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Check {
        self.detail = detail.into();
        self
    }
}

/// Folds many sub-checks into one, keeping the first failure as the detail.
pub fn all_of(name: impl Into<String>, checks: impl IntoIterator<Item = Check>) -> Check {
    let mut count = 0usize;
    for c in checks {
        count += 1;
        if !c.passed {
            let detail = if c.detail.is_empty() {
                c.name
            } else {
                format!("{}: {}", c.name, c.detail)
            };
            return Check::fail(name, detail);
        }
    }
    Check::pass(name).with_detail(format!("{count} cases"))
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
