//! Closure of Galois connections and equivalences under (dependent)
//! function relators.
//!
//! Given a component record `E1` and families `L₂`, `R₂`, `l₂`, `r₂`, the
//! closure is `L := [x₁ x₂ ∷ ≤L₁] ⇛⊕ ≤L₂ x₁ x₂`, `R` likewise, with
//! `l f x' = l₂ x' (r₁ x') (f (r₁ x'))` and `r g x = r₂ x (l₁ x) (g (l₁ x))`.
//! Relations on function spaces are materialised within a cap; the maps and
//! pointwise checks work on single tables without materialising anything.

mod closure;
pub mod examples;
mod mono;
pub mod random;
mod theorem;

pub use closure::{build_dep_fun_closure, DepFunClosureInput, DepFunClosureOutput};
pub use mono::{check_mono_conditions, MonoVariant};
pub use theorem::{
    closure_hypotheses, dependent_classes, dependent_galois_rel, galois_at, mono_collapse_check,
    similarity_at, similarity_check, similarity_hypotheses, verify_closure_theorem,
    SimilarityVariant,
};
