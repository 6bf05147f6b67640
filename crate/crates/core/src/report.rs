use std::fmt;

use serde::{Deserialize, Serialize};

/// Absolute tolerance for entry-level linear relations on unit-scale tensors.
pub const DEFAULT_TOL_ABS: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionRecord {
    pub name: String,
    /// Largest absolute violation over all index tuples.
    pub max_violation: f64,
    /// `max_violation / ‖tensor‖_∞`, 0 for a zero tensor.
    pub relative_violation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Outcome of a condition system: one record per condition plus the overall verdict.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub conditions: Vec<ConditionRecord>,
    pub passed: bool,
}

impl ConditionReport {
    pub fn new() -> Self {
        Self {
            conditions: Vec::new(),
            passed: true,
        }
    }

    /// Records a condition; `scale` is the norm used for the relative violation.
    pub fn push(&mut self, name: impl Into<String>, max_violation: f64, scale: f64, tolerance: f64) {
        let passed = max_violation <= tolerance;
        self.passed &= passed;
        self.conditions.push(ConditionRecord {
            name: name.into(),
            max_violation,
            relative_violation: if scale > 0.0 { max_violation / scale } else { 0.0 },
            tolerance,
            passed,
        });
    }

    pub fn get(&self, name: &str) -> Option<&ConditionRecord> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> impl Iterator<Item = &ConditionRecord> {
        self.conditions.iter().filter(|c| !c.passed)
    }

    /// Appends every record of `other`, keeping the overall verdict consistent.
    pub fn merge(&mut self, other: ConditionReport) {
        for c in other.conditions {
            self.passed &= c.passed;
            self.conditions.push(c);
        }
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.conditions {
            writeln!(
                f,
                "{:4}  {:<40} max {:.3e}  rel {:.3e}  tol {:.1e}",
                if c.passed { "ok" } else { "FAIL" },
                c.name,
                c.max_violation,
                c.relative_violation,
                c.tolerance
            )?;
        }
        write!(f, "verdict: {}", if self.passed { "pass" } else { "fail" })
    }
}
