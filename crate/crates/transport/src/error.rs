use pgal_relation::CheckReport;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, TransportError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransportError {
    #[error(transparent)]
    Value(#[from] pgal_value::Error),

    #[error("{kind} {name:?} is already registered")]
    Duplicate { kind: &'static str, name: String },

    #[error("equivalence {name:?} rejected: {}", failing(report))]
    Rejected { name: String, report: Box<CheckReport> },

    #[error("unresolved {kind} {name:?}")]
    Unresolved { kind: &'static str, name: String },

    #[error("expressions are not parallel: {left} against {right}")]
    ShapeMismatch { left: String, right: String },

    #[error("side condition failed: {}", failing(report))]
    SideCondition { report: Box<CheckReport> },

    #[error("term {term:?} is not in the domain: {}", failing(report))]
    NotInDom { term: String, report: Box<CheckReport> },

    #[error("transported term is not related to its source: {}", failing(report))]
    Unrelated { report: Box<CheckReport> },

    #[error("unknown {kind} {name:?}")]
    UnknownId { kind: &'static str, name: String },
}

fn failing(r: &CheckReport) -> String {
    r.first_failure().unwrap_or(r).to_string()
}

impl TransportError {
    /// The check report carried by the error, if any.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            TransportError::Rejected { report, .. }
            | TransportError::SideCondition { report }
            | TransportError::NotInDom { report, .. }
            | TransportError::Unrelated { report } => Some(report),
            _ => None,
        }
    }
}
