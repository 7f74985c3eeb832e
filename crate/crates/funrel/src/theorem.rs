use std::collections::HashMap;

use pgal_galois::{galois_class_check, galois_relator, GaloisClass};
use pgal_relation::{
    dep_fun_relator, materialize_relator, order_property_full, order_property_on_field,
    rel_equal, rel_finer, CheckReport, DepRel, OrderKind, Rel, RelatorKind,
};
use pgal_value::{enumerate_fun_tables, Error, FunTable, Result, Value};

use crate::mono::{condition_m1, condition_m4, CaseInclusion};
use crate::{build_dep_fun_closure, check_mono_conditions, DepFunClosureInput, DepFunClosureOutput, MonoVariant};

fn class_name(star: GaloisClass) -> Result<&'static str> {
    match star {
        GaloisClass::PreEquiv => Ok("closure_pre_equiv"),
        GaloisClass::PerEquiv => Ok("closure_per_equiv"),
        GaloisClass::Connection => Ok("closure_connection"),
        other => Err(Error::Wiring(format!(
            "closure theorem is stated for pre_equiv, per_equiv and connection, not {}",
            other.name()
        ))),
    }
}

/// `class` of the case record at every `x ⪅L₁ x'`. The witness is `(x, x')`
/// and the detail names the failing clause.
pub fn dependent_classes(input: &DepFunClosureInput, class: GaloisClass) -> CheckReport {
    let name = format!("dependent_{}", class.name());
    let e1 = &input.e1;
    for (x, xp) in e1.galois_rel().index_pairs() {
        let rep = galois_class_check(class, &input.pair_record(x, xp));
        if rep.is_fail() {
            let leaf = rep.first_failure().map(|f| f.to_string()).unwrap_or_default();
            let w = vec![e1.alpha().elements()[x].clone(), e1.beta().elements()[xp].clone()];
            return CheckReport::fail(name, w).with_detail(leaf);
        }
    }
    CheckReport::pass(name)
}

/// `x₁ ≤ x₂ ⟶ transitive (D x₁ x₂)`; the witness is `(x₁, x₂, y₁, y₂, y₃)`.
fn transitive_cases(name: &str, r1: &Rel, d: &DepRel) -> CheckReport {
    let mut memo: HashMap<usize, Option<Vec<Value>>> = HashMap::new();
    for (x1, x2) in r1.index_pairs() {
        let inner = memo.entry(d.case_id(x1, x2)).or_insert_with(|| {
            order_property_full(OrderKind::TransitiveOn, d.at_idx(x1, x2))
                .expect("homogeneous case")
                .witness
        });
        if let Some(w) = inner {
            let mut out = vec![r1.left().elements()[x1].clone(), r1.right().elements()[x2].clone()];
            out.extend(w.iter().cloned());
            return CheckReport::fail(name, out);
        }
    }
    CheckReport::pass(name)
}

fn field_refl(name: &str, r: &Rel) -> CheckReport {
    order_property_on_field(OrderKind::ReflexiveOn, r)
        .expect("homogeneous")
        .renamed(name)
}

/// Hypotheses of the closure theorem for `star`, without building anything.
pub fn closure_hypotheses(input: &DepFunClosureInput, star: GaloisClass) -> Result<Vec<CheckReport>> {
    class_name(star)?;
    let e1 = &input.e1;
    Ok(match star {
        GaloisClass::Connection => vec![
            galois_class_check(star, e1).renamed("component_galois_connection"),
            field_refl("reflexive_on_field_left", e1.left()),
            field_refl("reflexive_on_field_right", e1.right()),
            dependent_classes(input, star),
            transitive_cases("transitive_left_cases", e1.left(), &input.l2),
            transitive_cases("transitive_right_cases", e1.right(), &input.r2),
            check_mono_conditions(input, MonoVariant::Appendix),
        ],
        _ => vec![
            galois_class_check(star, e1).renamed(format!("component_{}", star.name())),
            dependent_classes(input, star),
            check_mono_conditions(input, MonoVariant::Main),
        ],
    })
}

/// The closure theorem: hypotheses on the components, conclusion `star` on
/// the built record. Hypothesis failures make the report `Inapplicable`; a
/// `Fail` means the hypotheses held and the conclusion did not.
pub fn verify_closure_theorem(input: &DepFunClosureInput, star: GaloisClass) -> Result<CheckReport> {
    let name = class_name(star)?;
    let hyps = closure_hypotheses(input, star)?;
    let out = build_dep_fun_closure(input)?;
    let concl = galois_class_check(star, &out.record).renamed(format!("closure_is_{}", star.name()));
    Ok(CheckReport::theorem(name, hyps, concl))
}

/// `⪅L₂ x x' := Galois (L₂ x (r₁ x')) (R₂ (l₁ x) x') (r₂ x x')`, indexed by
/// `α₁ × α₂` over `β₁ × β₂`.
pub fn dependent_galois_rel(input: &DepFunClosureInput) -> DepRel {
    let e1 = &input.e1;
    let (b1, b2) = (input.l2.base_left(), input.r2.base_left());
    let (a1, a2) = (e1.alpha(), e1.beta());
    DepRel::from_fn(a1.clone(), a2.clone(), b1.clone(), b2.clone(), |x, xp| {
        let (i, j) = (a1.require(x)?, a2.require(xp)?);
        galois_relator(
            input.l2.at_idx(i, e1.r().apply_idx(j)),
            input.r2.at_idx(e1.l().apply_idx(i), j),
            input.r2f.at_idx(i, j),
        )
    })
    .expect("input wiring")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimilarityVariant {
    /// Preorder equivalences with the main conditions.
    PreEquiv,
    /// A connection with the bounded conditions on `L₂`.
    Connection,
}

/// `x₁ ≤ x₂ ≤ x₃ ⟶ L₂ x₁ x₂ ≤ L₂ x₁ x₃` and, with `eta`,
/// `x₁ ≤ x₂ ≤ x₃ ≤ η x₂ ⟶ L₂ x₁ x₃ ≤ L₂ x₁ x₂`.
fn second_param_cond(name: &str, r1: &Rel, d: &DepRel, eta: Option<&[usize]>) -> CheckReport {
    let mut incl = CaseInclusion::new(d);
    for x1 in 0..r1.left().len() {
        for &x2 in r1.row(x1) {
            for &x3 in r1.row(x2 as usize) {
                let (x2, x3) = (x2 as usize, x3 as usize);
                let miss = match eta {
                    None => incl.missing((x1, x2), (x1, x3)),
                    Some(eta) if r1.holds_idx(x3, eta[x2]) => incl.missing((x1, x3), (x1, x2)),
                    Some(_) => None,
                };
                if let Some((y, z)) = miss {
                    let c = r1.left();
                    let w = vec![
                        c.elements()[x1].clone(),
                        c.elements()[x2].clone(),
                        c.elements()[x3].clone(),
                        d.base_left().elements()[y].clone(),
                        d.base_right().elements()[z].clone(),
                    ];
                    return CheckReport::fail(name, w);
                }
            }
        }
    }
    CheckReport::pass(name)
}

/// `mono r₂ x x'` from `R₂ (l₁ x) x'` to `L₂ x (r₁ x')` at every `x ⪅L₁ x'`.
fn dependent_mono_r2(input: &DepFunClosureInput) -> CheckReport {
    let name = "dependent_mono_r2";
    let e1 = &input.e1;
    for (x, xp) in e1.galois_rel().index_pairs() {
        let e = input.pair_record(x, xp);
        let s = DepRel::constant(e.beta().clone(), e.beta().clone(), e.left().clone());
        let rep = dep_fun_relator(RelatorKind::MonoFun, e.right(), &s, e.r(), e.r()).expect("wiring");
        if let Some(inner) = rep.witness {
            let mut w = vec![e1.alpha().elements()[x].clone(), e1.beta().elements()[xp].clone()];
            w.extend(inner);
            return CheckReport::fail(name, w);
        }
    }
    CheckReport::pass(name)
}

pub fn similarity_hypotheses(input: &DepFunClosureInput, variant: SimilarityVariant) -> Vec<CheckReport> {
    let e1 = &input.e1;
    match variant {
        SimilarityVariant::PreEquiv => vec![
            galois_class_check(GaloisClass::PreEquiv, e1).renamed("component_pre_equiv"),
            dependent_classes(input, GaloisClass::PreEquiv),
            condition_m1(input, MonoVariant::Main),
            condition_m4(input),
        ],
        SimilarityVariant::Connection => {
            let eta = e1.unit();
            vec![
                galois_class_check(GaloisClass::Connection, e1)
                    .renamed("component_galois_connection"),
                field_refl("reflexive_on_field_left", e1.left()),
                dependent_mono_r2(input),
                transitive_cases("transitive_left_cases", e1.left(), &input.l2),
                second_param_cond("left_rel_grows", e1.left(), &input.l2, None),
                second_param_cond("left_rel_bounded", e1.left(), &input.l2, Some(eta.indices())),
                condition_m4(input),
            ]
        }
    }
}

/// `f ⪅L g ⟷ ([x x' ∷ ⪅L₁] ⇛ ⪅L₂ x x') f g` for every `f` in the domain
/// of `L` and `g` in the codomain of `R`; the witness is `(f, g)`.
pub fn similarity_check(
    input: &DepFunClosureInput,
    out: &DepFunClosureOutput,
    variant: SimilarityVariant,
) -> CheckReport {
    let name = match variant {
        SimilarityVariant::PreEquiv => "closure_similarity",
        SimilarityVariant::Connection => "closure_similarity_connection",
    };
    let hyps = similarity_hypotheses(input, variant);
    let e = &out.record;
    let gal = e.galois_rel();
    let outer = input.e1.galois_rel();
    let inner = dependent_galois_rel(input);
    let mut bad = None;
    'outer: for (a, f) in out.space_l.iter().enumerate() {
        if !e.left().in_dom_idx(a) {
            continue;
        }
        for (b, g) in out.space_r.iter().enumerate() {
            if !e.right().in_codom_idx(b) {
                continue;
            }
            let rhs = pgal_relation::relator_violation(&outer, &inner, f.indices(), g.indices()).is_none();
            if gal.holds_idx(a, b) != rhs {
                bad = Some(vec![f.to_value(), g.to_value()]);
                break 'outer;
            }
        }
    }
    CheckReport::theorem(name, hyps, CheckReport::from_witness("galois_rel_is_relator", bad))
}

/// `L f (r g)` and `in_codom R g` evaluated directly on two tables, without
/// materialising the function spaces. `in_codom` of a monotone relator holds
/// exactly for the monotone tables, which is what is checked.
pub fn galois_at(input: &DepFunClosureInput, f: &FunTable, g: &FunTable) -> Result<bool> {
    let e1 = &input.e1;
    let rg = input.r_map(g)?;
    let in_codom = dep_fun_relator(RelatorKind::MonoFun, e1.right(), &input.r2, g, g)?.verdict();
    let related = dep_fun_relator(RelatorKind::MonoRelator, e1.left(), &input.l2, f, &rg)?.verdict();
    Ok(in_codom && related)
}

/// Both sides of the similarity biconditional at one pair of tables. Sub
/// reports give the truth of each side.
pub fn similarity_at(input: &DepFunClosureInput, f: &FunTable, g: &FunTable) -> Result<CheckReport> {
    let lhs = galois_at(input, f, g)?;
    let rhs = dep_fun_relator(
        RelatorKind::Plain,
        &input.e1.galois_rel(),
        &dependent_galois_rel(input),
        f,
        g,
    )?
    .verdict();
    let subs = vec![
        CheckReport::from_bool("galois_rel", lhs),
        CheckReport::from_bool("relator", rhs),
    ];
    let rep = if lhs == rhs {
        CheckReport::pass("similarity_at")
    } else {
        CheckReport::fail("similarity_at", vec![f.to_value(), g.to_value()])
    };
    Ok(rep.with_subs(subs))
}

/// Under reflexivity on the field of `L₁`, parameter monotonicity of `L₂`
/// and PER cases, the monotone relator equals the plain one.
pub fn mono_collapse_check(l1: &Rel, l2: &DepRel, cap: usize) -> Result<CheckReport> {
    let ctx = "mono_collapse_check";
    l1.expect_homogeneous(ctx)?;
    l2.param1().expect_same(l1.left(), ctx)?;
    l2.param2().expect_same(l1.left(), ctx)?;
    l2.base_left().expect_same(l2.base_right(), ctx)?;
    let mut incl = CaseInclusion::new(l2);
    let mut diag_right = None;
    let mut diag_left = None;
    for (x1, x2) in l1.index_pairs() {
        let w = |y: usize, z: usize| {
            vec![
                l1.left().elements()[x1].clone(),
                l1.left().elements()[x2].clone(),
                l2.base_left().elements()[y].clone(),
                l2.base_left().elements()[z].clone(),
            ]
        };
        if diag_right.is_none() {
            diag_right = incl.missing((x2, x2), (x1, x2)).map(|(y, z)| w(y, z));
        }
        if diag_left.is_none() {
            diag_left = incl.missing((x1, x1), (x1, x2)).map(|(y, z)| w(y, z));
        }
    }
    let mut per_memo: HashMap<usize, Option<Vec<Value>>> = HashMap::new();
    let mut per_bad = None;
    for (x1, x2) in l1.index_pairs() {
        let res = per_memo.entry(l2.case_id(x1, x2)).or_insert_with(|| {
            order_property_full(OrderKind::PerOn, l2.at_idx(x1, x2))
                .expect("homogeneous")
                .witness
        });
        if let Some(inner) = res {
            let mut w = vec![l1.left().elements()[x1].clone(), l1.left().elements()[x2].clone()];
            w.extend(inner.iter().cloned());
            per_bad = Some(w);
            break;
        }
    }
    let hyps = vec![
        field_refl("reflexive_on_field", l1),
        CheckReport::from_witness("diagonal_right_below", diag_right),
        CheckReport::from_witness("diagonal_left_below", diag_left),
        CheckReport::from_witness("per_cases", per_bad),
    ];
    let space = enumerate_fun_tables(l1.left(), l2.base_left(), cap)?;
    let plain = materialize_relator(RelatorKind::Plain, l1, l2, &space, &space, cap)?;
    let mono = materialize_relator(RelatorKind::MonoRelator, l1, l2, &space, &space, cap)?;
    let concl = rel_equal("mono_relator_eq_relator", &mono, &plain)?;
    debug_assert!(rel_finer(&mono, &plain)?.verdict());
    Ok(CheckReport::theorem("mono_collapse", hyps, concl))
}
