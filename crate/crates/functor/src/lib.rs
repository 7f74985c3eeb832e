//! Natural functors over finite carriers and the closure of Galois
//! connections and equivalences under them.
//!
//! Built-in functors are `identity`, `const(C)`, `option`, `list(k)`,
//! `product(n)` and `sum(n)`, closed under application `F[G₁,…,Gₘ]`.
//! Carriers are bounded: lists have at most `k` elements and every built
//! carrier is subject to a size cap.

mod closure;
mod def;

pub use closure::{build_functor_closure, functor_laws, functor_similarity_check, verify_functor_theorem};
pub use def::{builtin_functor, FunctorDef, RelFn, ValFn, MAX_ARITY};
