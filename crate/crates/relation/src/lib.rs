//! Finite extensional relations with the order-theoretic vocabulary used by
//! Galois connections: composition, inverse, relativised order properties,
//! unit-style point properties and (dependent) function relators.

mod dep;
mod ops;
mod order;
mod rel;
mod relator;
mod report;

pub use dep::{dep_fun_map, DepFunTable, DepRel};
pub use ops::{
    rel_compose, rel_equal, rel_finer, rel_if, rel_inverse, rel_membership, restricted_eq,
    Membership,
};
pub use order::{
    order_property, order_property_full, order_property_on_field, point_property, OrderKind,
    PointKind,
};
pub use rel::{Pred, Rel};
pub use relator::{
    decode_space, dep_fun_relator, materialize_relator, relator_violation, RelatorKind,
};
pub use report::{CheckReport, Outcome};
