//! Worked examples as concrete finite fixtures, plus seeded generators of
//! random instances for consistency sweeps.
//!
//! - identity: equality on `B2 = {0,1}` with identity maps.
//! - B: integers and naturals, `(Zpos, =Nat3, to_nat, to_int)`.
//! - C: lists and finite sets over `{0,1,2}`, list bound 3.
//! - D: guarded subtraction.
//! - E: the halving connection between `≤` on `{0..3}` and `≤` on `{0,1}`.
//! - indexing: lists and tagged arrays over a PER on `{0,1,2}`.
//! - renaming: `Nat3` and a tagged copy of it.

pub mod basic;
pub mod lists;
pub mod random;
pub mod subtraction;

pub use basic::*;
pub use lists::*;
pub use subtraction::*;
