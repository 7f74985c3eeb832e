//! Transport of terms along synthesised partial Galois equivalences.
//!
//! A [`Registry`] holds named carriers, relations, terms, guard conditions
//! and base equivalences (PER equivalences only). [`elaborate`] builds the
//! equivalence between two parallel relation expressions from the closure
//! constructions for dependent functions, functors and composition, checking
//! each construction's hypotheses on the way. [`transport`] then maps a term
//! across and certifies the result.
//!
//! Expression syntax:
//!
//! ```text
//! atom NAME | eq CARRIER | left NAME | right NAME
//! fun(x y: EXPR [if COND(x,y)]) -> EXPR
//! functor NAME(EXPR, ...) | compose(EXPR, EXPR)
//! ```

mod elaborate;
mod error;
mod expr;
mod registry;
mod search;
mod synth;
mod transport;

pub use elaborate::{elaborate, Synthesized};
pub use error::{Result, TransportError};
pub use expr::{parse_rel_expr, Guard, RelExpr, Side, WILDCARD};
pub use registry::Registry;
pub use search::{
    all_pers, counterexample_search, subtraction_exprs, subtraction_registry, SearchBounds, CLAIMS, NOTHING,
};
pub use synth::Space;
pub use transport::{transport, transport_value, TransportResult};
