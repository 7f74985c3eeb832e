//! Batch front end for the partial Galois toolkit.
//!
//! A run reads one JSON declaration document, resolves its carriers,
//! relations, functions, functors, equivalences and quotients, then executes
//! its commands in order:
//!
//! - `check`: a class check of a declared equivalence;
//! - `transport`: synthesis plus transport of a registered function;
//! - `verify`: one of the closure, similarity, lemma or lifting checks;
//! - `counterexample`: a bounded search with one hypothesis dropped.
//!
//! Reports are deterministic. The text form has one line per command,
//! `STATUS command subject property [witness=...] [detail]`; the structured
//! form is a JSON rendering of [`RunReport`].

mod doc;
mod error;
mod load;
mod report;
mod run;

pub use doc::{parse_document, Command, Document, VerifyArgs};
pub use error::{CliError, Result};
pub use load::{load, Limits, Loaded};
pub use report::{emit_report, parse_report, Dump, Entry, Format, ReportNode, RunReport, Status, Summary};
pub use run::{class_hierarchy, run_command, run_document, run_document_timed, THEOREMS};

/// Runs the document at `path`; an unreadable file is an ERROR entry.
pub fn run_file(path: &std::path::Path, limits: Limits) -> RunReport {
    match std::fs::read_to_string(path) {
        Ok(text) => run_document(&text, limits),
        Err(source) => {
            let e = CliError::Io { path: path.display().to_string(), source };
            RunReport::new(vec![Entry::error(0, "load", "document", &e)])
        }
    }
}
