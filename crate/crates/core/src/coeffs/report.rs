use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A stated form that disagrees with the derived one; informational.
    Discrepancy,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub identity_name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_expr: Option<String>,
}

/// Outcome of a batch of exact identity checks.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<IdentityCheck>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report { title: title.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, ok: bool, residual: Option<String>) {
        self.checks.push(IdentityCheck {
            identity_name: name.into(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            residual_expr: if ok { None } else { residual },
        });
    }

    pub fn note(&mut self, name: impl Into<String>, residual: Option<String>) {
        self.checks.push(IdentityCheck {
            identity_name: name.into(),
            status: CheckStatus::Discrepancy,
            residual_expr: residual,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// True when no check failed. Discrepancy notes do not count as failures.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.checks).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {}", self.title)?;
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Discrepancy => "NOTE",
            };
            write!(f, "[{tag}] {}", c.identity_name)?;
            if let Some(r) = &c.residual_expr {
                write!(f, "  residual: {r}")?;
            }
            writeln!(f)?;
        }
        let total = self.checks.len();
        writeln!(f, "{} of {} checks failed", self.failures(), total)
    }
}
