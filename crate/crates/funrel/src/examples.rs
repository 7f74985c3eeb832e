//! Closure inputs for the worked examples.

use pgal_fixtures as fx;
use pgal_galois::EquivalenceRecord;
use pgal_relation::{rel_if, DepFunTable, DepRel, Rel};
use pgal_value::{FunTable, Result, Value, DEFAULT_CAP};

use crate::{build_dep_fun_closure, DepFunClosureInput};

/// Identity equivalences on `B2` in both positions.
pub fn identity_b2() -> DepFunClosureInput {
    let id = fx::identity_record();
    DepFunClosureInput::non_dependent(id.clone(), &id, DEFAULT_CAP).expect("wiring")
}

/// `(Le4 ⇛ Le2)` against `(Le2 ⇛ Le4)`: Fixture E on the domains and the
/// doubling connection `(Le2, Le4, 2·, halve)` on the codomains.
pub fn lifted_e() -> DepFunClosureInput {
    let double = FunTable::from_fn(fx::n2(), fx::n4(), |v| Value::Int(2 * fx::int(v))).expect("in range");
    let e2 = EquivalenceRecord::new(fx::le_on(fx::n2()), fx::le_on(fx::n4()), double, fx::halve())
        .expect("wiring");
    DepFunClosureInput::non_dependent(fx::record_e(), &e2, DEFAULT_CAP).expect("wiring")
}

/// `(LFS_L ⇛ (=Nat3))` against `((=FSet3) ⇛ (=Nat3))`. The function spaces
/// are far beyond any cap; only pointwise operations apply.
pub fn lifted_c() -> DepFunClosureInput {
    let nat = EquivalenceRecord::identity(fx::nat3());
    DepFunClosureInput::non_dependent(fx::record_c(), &nat, DEFAULT_CAP).expect("wiring")
}

/// The inner relator of guarded subtraction with the outer argument fixed:
/// `[i₂ _ ∷ Zpos | i₁ ≥ i₂] ⇛ Zpos` against
/// `[n₂ _ ∷ (=) | to_nat i₁ ≥ n₂] ⇛ (=)`, over `Int3` and `Nat2`.
pub fn subtraction_inner(i1: i64) -> DepFunClosureInput {
    let e1 = fx::record_b_small();
    let n1 = fx::int(e1.l().at(&Value::Int(i1)));
    let (a1, a2) = (e1.alpha().clone(), e1.beta().clone());
    let zpos = e1.left().clone();
    let eq = e1.right().clone();
    let l2 = DepRel::from_fn(a1.clone(), a1.clone(), a1.clone(), a1.clone(), |i2, _| {
        Ok(rel_if(i1 >= fx::int(i2), &zpos))
    })
    .expect("wiring");
    let r2 = DepRel::from_fn(a2.clone(), a2.clone(), a2.clone(), a2.clone(), |n2, _| {
        Ok(rel_if(n1 >= fx::int(n2), &eq))
    })
    .expect("wiring");
    let l2f = DepFunTable::constant(a2.clone(), a1.clone(), e1.l().clone());
    let r2f = DepFunTable::constant(a1, a2, e1.r().clone());
    DepFunClosureInput::new(e1, l2, r2, l2f, r2f, DEFAULT_CAP).expect("wiring")
}

/// The outer relator of guarded subtraction,
/// `[i₁ _ ∷ Zpos] ⇛ ([i₂ _ ∷ Zpos | i₁ ≥ i₂] ⇛ Zpos)`, over `Int3` and
/// `Nat2`. Its cases are the materialised inner relators; the outer function
/// spaces themselves exceed the cap.
pub fn subtraction_outer() -> Result<DepFunClosureInput> {
    let e1 = fx::record_b_small();
    let (a1, a2) = (e1.alpha().clone(), e1.beta().clone());
    let inner_l = |i1: &Value| -> Result<Rel> {
        Ok(build_dep_fun_closure(&subtraction_inner(fx::int(i1)))?.record.left().clone())
    };
    let inner_r = |n1: &Value| -> Result<Rel> {
        let i1 = fx::int(e1.r().at(n1));
        Ok(build_dep_fun_closure(&subtraction_inner(i1))?.record.right().clone())
    };
    let any = build_dep_fun_closure(&subtraction_inner(0))?.record;
    let (sl, sr) = (any.alpha().clone(), any.beta().clone());
    let l2 = DepRel::from_fn(a1.clone(), a1.clone(), sl.clone(), sl.clone(), |i1, _| inner_l(i1))?;
    let r2 = DepRel::from_fn(a2.clone(), a2.clone(), sr.clone(), sr.clone(), |n1, _| inner_r(n1))?;
    // The inner maps do not depend on the guard.
    let l2f = DepFunTable::constant(a2.clone(), a1.clone(), any.l().clone());
    let r2f = DepFunTable::constant(a1, a2, any.r().clone());
    DepFunClosureInput::new(e1, l2, r2, l2f, r2f, DEFAULT_CAP)
}

/// `≤` on `{0,1,2}` with `L₂ x₁ x₂ := rel_if (x₁ ≥ x₂) Zpos`, except at the
/// single pair `(0, 2)` where the guard reads `x₁ ≤ x₂`.
pub fn mutated_guard() -> DepFunClosureInput {
    let n3 = fx::nat3();
    let le = fx::le_on(n3.clone());
    let e1 = EquivalenceRecord::new(
        le.clone(),
        le,
        FunTable::identity(n3.clone()),
        FunTable::identity(n3.clone()),
    )
    .expect("wiring");
    let s = fx::zpos_on(fx::int3());
    let family = |flip: bool| {
        DepRel::from_fn(n3.clone(), n3.clone(), fx::int3(), fx::int3(), |x1, x2| {
            let (a, b) = (fx::int(x1), fx::int(x2));
            let guard = if flip && (a, b) == (0, 2) { a <= b } else { a >= b };
            Ok(rel_if(guard, &s))
        })
        .expect("wiring")
    };
    let id = FunTable::identity(fx::int3());
    DepFunClosureInput::new(
        e1,
        family(true),
        family(false),
        DepFunTable::constant(n3.clone(), n3.clone(), id.clone()),
        DepFunTable::constant(n3.clone(), n3, id),
        DEFAULT_CAP,
    )
    .expect("wiring")
}
