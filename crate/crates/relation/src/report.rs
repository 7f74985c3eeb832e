use std::fmt;

use pgal_value::{show_tuple, Value};

/// Result of a decidable check.
///
/// `Inapplicable` is only produced by hypothesis-gated checks: the
/// hypotheses failed, so the conclusion says nothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    Inapplicable,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Inapplicable => "INAPPLICABLE",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub property: String,
    pub outcome: Outcome,
    /// Canonically smallest counterexample of a universally quantified property.
    pub witness: Option<Vec<Value>>,
    pub detail: Option<String>,
    pub sub_reports: Vec<CheckReport>,
}

impl CheckReport {
    fn new(property: impl Into<String>, outcome: Outcome) -> Self {
        CheckReport {
            property: property.into(),
            outcome,
            witness: None,
            detail: None,
            sub_reports: Vec::new(),
        }
    }

    pub fn pass(property: impl Into<String>) -> Self {
        CheckReport::new(property, Outcome::Pass)
    }

    pub fn fail(property: impl Into<String>, witness: Vec<Value>) -> Self {
        let mut r = CheckReport::new(property, Outcome::Fail);
        r.witness = Some(witness);
        r
    }

    /// A failure of a property that is not a plain universal statement.
    pub fn fail_plain(property: impl Into<String>) -> Self {
        CheckReport::new(property, Outcome::Fail)
    }

    pub fn inapplicable(property: impl Into<String>) -> Self {
        CheckReport::new(property, Outcome::Inapplicable)
    }

    pub fn from_bool(property: impl Into<String>, ok: bool) -> Self {
        if ok {
            CheckReport::pass(property)
        } else {
            CheckReport::fail_plain(property)
        }
    }

    /// `Pass` iff `witness` is `None`.
    pub fn from_witness(property: impl Into<String>, witness: Option<Vec<Value>>) -> Self {
        match witness {
            None => CheckReport::pass(property),
            Some(w) => CheckReport::fail(property, w),
        }
    }

    /// Conjunction. Fails with the first failing part's witness; otherwise
    /// inapplicable if any part is.
    pub fn all(property: impl Into<String>, parts: Vec<CheckReport>) -> Self {
        let mut r = CheckReport::new(property, Outcome::Pass);
        if let Some(bad) = parts.iter().find(|p| p.outcome == Outcome::Fail) {
            r.outcome = Outcome::Fail;
            r.witness = bad.witness.clone();
        } else if parts.iter().any(|p| p.outcome == Outcome::Inapplicable) {
            r.outcome = Outcome::Inapplicable;
        }
        r.sub_reports = parts;
        r
    }

    /// A conditional statement. The conclusion is always evaluated and kept
    /// as the last sub-report, but only decides the outcome when every
    /// hypothesis passes.
    pub fn theorem(
        property: impl Into<String>,
        hypotheses: Vec<CheckReport>,
        conclusion: CheckReport,
    ) -> Self {
        let hyps = CheckReport::all("hypotheses", hypotheses);
        let mut r = CheckReport::new(property, Outcome::Pass);
        if hyps.outcome != Outcome::Pass {
            r.outcome = Outcome::Inapplicable;
        } else if conclusion.outcome != Outcome::Pass {
            r.outcome = conclusion.outcome;
            r.witness = conclusion.witness.clone();
        }
        r.sub_reports = vec![hyps, conclusion];
        r
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_subs(mut self, subs: Vec<CheckReport>) -> Self {
        self.sub_reports = subs;
        self
    }

    pub fn renamed(mut self, property: impl Into<String>) -> Self {
        self.property = property.into();
        self
    }

    pub fn verdict(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    /// The deepest failing report along the first failing path.
    pub fn first_failure(&self) -> Option<&CheckReport> {
        if self.outcome != Outcome::Fail {
            return None;
        }
        for s in &self.sub_reports {
            if let Some(leaf) = s.first_failure() {
                return Some(leaf);
            }
        }
        Some(self)
    }

    /// Depth-first search for a sub-report by property name.
    pub fn find(&self, property: &str) -> Option<&CheckReport> {
        if self.property == property {
            return Some(self);
        }
        self.sub_reports.iter().find_map(|s| s.find(property))
    }

    pub fn witness_text(&self) -> Option<String> {
        self.witness.as_deref().map(show_tuple)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.outcome, self.property)?;
        if let Some(w) = self.witness_text() {
            write!(f, " witness={w}")?;
        }
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}
