//! Galois relators, the hierarchy of partial Galois properties, connections
//! and equivalences, order equivalences and partial quotient types.
//!
//! Everything is decided by enumeration over the carriers of the inputs.
//! Hypothesis-gated lemmas report `Inapplicable` when their hypotheses fail,
//! and `Fail` only when the hypotheses hold and the conclusion does not.

mod class;
mod lemmas;
mod quotient;
mod record;

pub use class::{flip_galois_relator, galois_class_check, galois_relator, unit_counit};
pub use lemmas::{
    galois_equiv_to_order_equiv, galois_lemma_suite, galrelpartquoteq, galreliffalt, genpartquot,
    order_equiv_to_galois_equiv, LemmaSubject,
};
pub use quotient::{induced_left_rel, partial_quotient_check, quotient_domain, PartialQuotient};
pub use record::{EquivalenceRecord, GaloisClass};
