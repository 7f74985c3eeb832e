//! Closed first-order values, finite carriers and total function tables.
//!
//! Every quantifier elsewhere in the workspace ranges over a [`Carrier`], so
//! the canonical order on [`Value`] fixes enumeration order and therefore
//! which counterexample is reported first.

mod carrier;
mod error;
mod parse;
mod table;
mod value;

pub use carrier::Carrier;
pub use error::{Error, Result};
pub use parse::{parse_value, parse_value_with};
pub use table::{enumerate_fun_tables, fun_space, fun_space_size, FunTable, FN_TAG};
pub use value::{show_tuple, Value};

/// Default maximum length of `List` values.
pub const DEFAULT_LIST_BOUND: usize = 3;

/// Default cap on function-space tables and materialised relator pairs.
pub const DEFAULT_CAP: usize = 4096;
