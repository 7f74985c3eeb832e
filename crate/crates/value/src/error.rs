use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("list of length {len} at offset {pos} exceeds bound {bound}")]
    ListBound { pos: usize, len: usize, bound: usize },

    #[error("{what}: {count} exceeds cap {cap}")]
    CapExceeded { what: String, count: String, cap: usize },

    #[error("value {value} is not in carrier {carrier}")]
    NotInCarrier { value: String, carrier: String },

    #[error("carrier mismatch in {context}: expected {expected}, found {found}")]
    CarrierMismatch {
        context: String,
        expected: String,
        found: String,
    },

    #[error("{0}")]
    Wiring(String),
}

impl Error {
    pub fn mismatch(context: &str, expected: &str, found: &str) -> Self {
        Error::CarrierMismatch {
            context: context.to_string(),
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
