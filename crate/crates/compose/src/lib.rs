//! Composition of equivalences whose middle relations need not coincide.
//!
//! For `E1 = (≤L₁, ≤R₁, l₁, r₁)` on `α, β` and `E2 = (≤L₂, ≤R₂, l₂, r₂)` on
//! `β, γ`, with `⪅Rᵢ := Galois ≤Rᵢ ≤Lᵢ lᵢ`:
//!
//! ```text
//! L := ⪅L₁ ∘ ≤L₂ ∘ ⪅R₁      l := l₂ ∘ l₁
//! R := ⪅R₂ ∘ ≤R₁ ∘ ⪅L₂      r := r₁ ∘ r₂
//! ```
//!
//! Read left to right: a chain for `L` starts in `α`, moves to `β` through
//! `⪅L₁`, takes one `≤L₂` step, and returns through `⪅R₁`. When `≤R₁` and
//! `≤L₂` commute, such a chain can be mirrored by one for `R`.

mod comp;
mod lifting;

pub use comp::{
    build_composition, commutation_check, comp_similarity_check, verify_comp_coincide,
    verify_comp_theorem, CompStar, CompositionInput, SimilarityVariant,
};
pub use lifting::lifting_comparison_check;
