use std::fmt::Write as _;

use pgal_relation::{CheckReport, Outcome};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inapplicable => "INAPPLICABLE",
            Status::Error => "ERROR",
        }
    }
}

impl From<Outcome> for Status {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::Pass => Status::Pass,
            Outcome::Fail => Status::Fail,
            Outcome::Inapplicable => Status::Inapplicable,
        }
    }
}

/// A check report tree with values rendered in the value grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportNode {
    pub property: String,
    pub outcome: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subs: Vec<ReportNode>,
}

impl From<&CheckReport> for ReportNode {
    fn from(r: &CheckReport) -> Self {
        ReportNode {
            property: r.property.clone(),
            outcome: r.outcome.into(),
            witness: r.witness.as_ref().map(|w| w.iter().map(ToString::to_string).collect()),
            detail: r.detail.clone(),
            subs: r.sub_reports.iter().map(ReportNode::from).collect(),
        }
    }
}

/// A synthesised definition: the transported term, and its graph when it is
/// a function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dump {
    pub term_out: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub table: Vec<(String, String)>,
}

/// The outcome of one command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub index: usize,
    pub cmd: String,
    pub subject: String,
    pub status: Status,
    /// The failing property, or the command's top-level property.
    pub property: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportNode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dump: Option<Dump>,
}

impl Entry {
    pub fn error(index: usize, cmd: &str, subject: &str, e: &CliError) -> Self {
        Entry {
            index,
            cmd: cmd.to_string(),
            subject: subject.to_string(),
            status: Status::Error,
            property: "error".into(),
            witness: None,
            detail: Some(e.to_string()),
            report: None,
            dump: None,
        }
    }

    /// An entry summarising `r` by its first failure, if any.
    pub fn from_report(index: usize, cmd: &str, subject: &str, r: &CheckReport) -> Self {
        let lead = match r.outcome {
            Outcome::Fail => r.first_failure().unwrap_or(r),
            _ => r,
        };
        Entry {
            index,
            cmd: cmd.to_string(),
            subject: subject.to_string(),
            status: r.outcome.into(),
            property: lead.property.clone(),
            witness: lead.witness_text(),
            detail: lead.detail.clone(),
            report: Some(r.into()),
            dump: None,
        }
    }

    /// `STATUS command subject property [witness=...] [detail]`
    pub fn line(&self) -> String {
        let mut s = format!("{} {} {} {}", self.status.as_str(), self.cmd, self.subject, self.property);
        if let Some(w) = &self.witness {
            let _ = write!(s, " witness={w}");
        }
        if let Some(d) = &self.detail {
            let _ = write!(s, " {d}");
        }
        s
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    pub error: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(entries: Vec<Entry>) -> Self {
        let mut summary = Summary::default();
        for e in &entries {
            match e.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Inapplicable => summary.inapplicable += 1,
                Status::Error => summary.error += 1,
            }
        }
        RunReport { entries, summary }
    }

    /// 0 iff there is no FAIL or ERROR entry.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail + self.summary.error == 0 {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

pub fn emit_report(r: &RunReport, format: Format) -> String {
    match format {
        Format::Text => r.entries.iter().map(|e| e.line() + "\n").collect(),
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(r).expect("reports serialise");
            s.push('\n');
            s
        }
    }
}

/// Reads back a structured report.
pub fn parse_report(text: &str) -> Result<RunReport> {
    serde_json::from_str(text).map_err(|e| CliError::Parse { line: e.line(), column: e.column(), msg: e.to_string() })
}
