use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },

    #[error("{section} {name}: {msg}")]
    Decl { section: &'static str, name: String, msg: String },

    #[error("unresolved {kind} {name:?}")]
    Unresolved { kind: &'static str, name: String },

    #[error("carrier {0} is defined in terms of itself")]
    Cycle(String),

    #[error("{0}")]
    Value(#[from] pgal_value::Error),

    #[error("{0}")]
    Transport(#[from] pgal_transport::TransportError),

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub(crate) fn decl(section: &'static str, name: &str, e: impl std::fmt::Display) -> Self {
        CliError::Decl { section, name: name.to_string(), msg: e.to_string() }
    }
}
