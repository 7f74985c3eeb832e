use pgal_galois::{galois_class_check, EquivalenceRecord, GaloisClass};
use pgal_relation::{rel_equal, CheckReport, Rel};
use pgal_value::{Error, FunTable, Result};

use crate::FunctorDef;

fn expect_components(f: &FunctorDef, components: &[EquivalenceRecord]) -> Result<()> {
    if components.len() == f.arity() {
        Ok(())
    } else {
        Err(Error::Wiring(format!(
            "{f} has arity {}, got {} components",
            f.arity(),
            components.len()
        )))
    }
}

/// `(F_rel ≤L₁ … ≤Lₙ, F_rel ≤R₁ … ≤Rₙ, F_map l₁ … lₙ, F_map r₁ … rₙ)`.
pub fn build_functor_closure(
    f: &FunctorDef,
    components: &[EquivalenceRecord],
    cap: usize,
) -> Result<EquivalenceRecord> {
    expect_components(f, components)?;
    let lefts: Vec<Rel> = components.iter().map(|e| e.left().clone()).collect();
    let rights: Vec<Rel> = components.iter().map(|e| e.right().clone()).collect();
    let ls: Vec<FunTable> = components.iter().map(|e| e.l().clone()).collect();
    let rs: Vec<FunTable> = components.iter().map(|e| e.r().clone()).collect();
    EquivalenceRecord::new(
        f.rel(&lefts, cap)?,
        f.rel(&rights, cap)?,
        f.map(&ls, cap)?,
        f.map(&rs, cap)?,
    )
}

/// If every component is a `star`, so is the closure.
pub fn verify_functor_theorem(
    f: &FunctorDef,
    components: &[EquivalenceRecord],
    star: GaloisClass,
    cap: usize,
) -> Result<CheckReport> {
    match star {
        GaloisClass::Connection | GaloisClass::GaloisEquiv | GaloisClass::PreEquiv | GaloisClass::PerEquiv => {}
        other => {
            return Err(Error::Wiring(format!(
                "functor closure is stated for connection, galois_equiv, pre_equiv and per_equiv, not {}",
                other.name()
            )))
        }
    }
    let built = build_functor_closure(f, components, cap)?;
    let hyps = components
        .iter()
        .enumerate()
        .map(|(i, e)| galois_class_check(star, e).renamed(format!("component_{i}_{}", star.name())))
        .collect();
    let concl = galois_class_check(star, &built).renamed(format!("closure_is_{}", star.name()));
    Ok(CheckReport::theorem(format!("functor_{}", star.name()), hyps, concl))
}

/// `⪅L = F_rel ⪅L₁ … ⪅Lₙ`, as pair sets. Holds without hypotheses.
pub fn functor_similarity_check(
    f: &FunctorDef,
    components: &[EquivalenceRecord],
    cap: usize,
) -> Result<CheckReport> {
    let built = build_functor_closure(f, components, cap)?;
    let gals: Vec<Rel> = components.iter().map(EquivalenceRecord::galois_rel).collect();
    let lifted = f.rel(&gals, cap)?;
    rel_equal("functor_similarity", &built.galois_rel(), &lifted)
}

/// `F_map id … id = id` and `F_rel (=) … (=) = (=)` on the carrier built
/// from `args`.
pub fn functor_laws(f: &FunctorDef, args: &[std::sync::Arc<pgal_value::Carrier>], cap: usize) -> Result<CheckReport> {
    let ids: Vec<FunTable> = args.iter().map(|c| FunTable::identity(c.clone())).collect();
    let eqs: Vec<Rel> = args.iter().map(|c| Rel::equality(c.clone())).collect();
    let built = f.build_carrier(args, cap)?;
    let mapped = f.map(&ids, cap)?;
    let bad = built
        .elements()
        .iter()
        .find(|v| mapped.at(v) != *v)
        .map(|v| vec![v.clone()]);
    Ok(CheckReport::all(
        "functor_laws",
        vec![
            CheckReport::from_witness("map_identity", bad),
            rel_equal("rel_equality", &f.rel(&eqs, cap)?, &Rel::equality(built))?,
        ],
    ))
}
