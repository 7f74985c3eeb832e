use pgal_fixtures as fx;
use pgal_funrel::examples::*;
use pgal_funrel::*;
use pgal_galois::{galois_class_check, GaloisClass};
use pgal_relation::{Outcome, Rel};
use pgal_value::{FunTable, Value};

fn iv(v: i64) -> Value {
    Value::Int(v)
}

#[test]
fn identity_closure_is_identity_per_equiv() {
    let out = build_dep_fun_closure(&identity_b2()).unwrap();
    let e = &out.record;
    assert_eq!(e.alpha().len(), 4);
    assert_eq!(*e.left(), Rel::equality(e.alpha().clone()));
    assert_eq!(*e.right(), Rel::equality(e.beta().clone()));
    assert_eq!(*e.l(), FunTable::identity(e.alpha().clone()));
    assert!(galois_class_check(GaloisClass::PerEquiv, e).verdict());
    let thm = verify_closure_theorem(&identity_b2(), GaloisClass::PreEquiv).unwrap();
    assert_eq!(thm.outcome, Outcome::Pass, "{thm}");
}

#[test]
fn inner_subtraction_closure_is_per_equiv() {
    for i1 in [0, 1] {
        let input = subtraction_inner(i1);
        let thm = verify_closure_theorem(&input, GaloisClass::PerEquiv).unwrap();
        assert_eq!(thm.outcome, Outcome::Pass, "i1={i1}: {:?}", thm.first_failure());
        let out = build_dep_fun_closure(&input).unwrap();
        let sim = similarity_check(&input, &out, SimilarityVariant::PreEquiv);
        assert_ne!(sim.outcome, Outcome::Fail, "{sim}");
    }
}

#[test]
fn subtraction_mono_conditions_hold() {
    for i1 in [-1, 0, 1] {
        let rep = check_mono_conditions(&subtraction_inner(i1), MonoVariant::Main);
        assert!(rep.verdict(), "{rep}");
    }
    let outer = subtraction_outer().unwrap();
    let rep = check_mono_conditions(&outer, MonoVariant::Main);
    assert!(rep.verdict(), "{rep}");
    assert!(dependent_classes(&outer, GaloisClass::PerEquiv).verdict());
}

#[test]
fn outer_subtraction_exceeds_cap() {
    let outer = subtraction_outer().unwrap();
    assert!(build_dep_fun_closure(&outer).is_err());
}

#[test]
fn outer_r_map_follows_pointwise_formula() {
    let outer = subtraction_outer().unwrap();
    let e1 = &outer.e1;
    let space = outer.r2.base_left().clone();
    // `g n₁ := (n₂ ↦ n₁ −ℕ n₂)`
    let g = FunTable::from_fn(e1.beta().clone(), space.clone(), |n1| {
        let n1 = fx::int(n1);
        FunTable::from_fn(fx::nat2(), fx::nat2(), |n2| iv(fx::minus_nat_oracle(n1, fx::int(n2))))
            .unwrap()
            .to_value()
    })
    .unwrap();
    let rg = outer.r_map(&g).unwrap();
    for i in [-1, 0, 1] {
        let n = (i as i64).max(0);
        let inner = FunTable::from_value(fx::nat2(), fx::nat2(), g.at(&iv(n))).unwrap();
        // r₂ case: `to_int ∘ h ∘ to_nat`, evaluated independently.
        let expect = FunTable::from_fn(fx::int3(), fx::int3(), |j| {
            iv(fx::int(inner.at(&iv(fx::int(j).max(0)))))
        })
        .unwrap();
        assert_eq!(rg.at(&iv(i)), &expect.to_value(), "i={i}");
    }
}

#[test]
fn mutated_guard_breaks_first_condition() {
    let input = mutated_guard();
    let rep = check_mono_conditions(&input, MonoVariant::Main);
    let m1 = rep.find("mono_left_rel").unwrap();
    assert_eq!(m1.outcome, Outcome::Fail);
    let w = m1.witness.clone().unwrap();
    // Independent search for the smallest violating chain.
    let ok = |a: i64, b: i64| a <= b;
    let guard = |a: i64, b: i64| if (a, b) == (0, 2) { a <= b } else { a >= b };
    let mut first = None;
    'search: for x1 in 0..3 {
        for x2 in x1..3 {
            for x3 in x2..3 {
                for x4 in x3..3 {
                    assert!(ok(x1, x2) && ok(x2, x3) && ok(x3, x4));
                    if guard(x2, x3) || !guard(x1, x4) {
                        continue;
                    }
                    // Only full ⊄ Zpos can fail.
                    first = Some((x1, x2, x3, x4));
                    break 'search;
                }
            }
        }
    }
    let (x1, x2, x3, x4) = first.unwrap();
    assert_eq!(&w[..4], &[iv(x1), iv(x2), iv(x3), iv(x4)]);
    assert_eq!(&w[4..], &[iv(-1), iv(-1)]);
    let unmutated = check_mono_conditions(&input, MonoVariant::Main);
    assert!(unmutated.find("mono_right_rel").unwrap().verdict());
}

#[test]
fn lifted_e_is_a_connection() {
    let input = lifted_e();
    let thm = verify_closure_theorem(&input, GaloisClass::Connection).unwrap();
    assert_eq!(thm.outcome, Outcome::Pass, "{:?}", thm.first_failure());
    let out = build_dep_fun_closure(&input).unwrap();
    // Monotone tables N4 → N2 and N2 → N4.
    let mono_l = out.record.left().index_pairs().filter(|(a, b)| a == b).count();
    let mono_r = out.record.right().index_pairs().filter(|(a, b)| a == b).count();
    assert_eq!((mono_l, mono_r), (5, 10));
}

#[test]
fn lifted_c_transports_max_list_to_max_fset() {
    let input = lifted_c();
    let max_fset = input.l_map(&fx::max_list()).unwrap();
    for s in fx::fset3().elements() {
        assert_eq!(max_fset.at(s), &fx::max_fset_oracle(s), "{s}");
    }
    let sim = similarity_at(&input, &fx::max_list(), &max_fset).unwrap();
    assert!(sim.verdict());
    assert!(sim.sub_reports.iter().all(|r| r.verdict()));
}

#[test]
fn mono_collapse_examples() {
    let b2 = fx::b2();
    let eq = Rel::equality(b2.clone());
    let d = pgal_relation::DepRel::constant(b2.clone(), b2.clone(), eq.clone());
    let rep = mono_collapse_check(&eq, &d, 4096).unwrap();
    assert_eq!(rep.outcome, Outcome::Pass);

    let inner = subtraction_inner(0);
    let rep = mono_collapse_check(inner.e1.left(), &inner.l2, 4096).unwrap();
    assert_eq!(rep.outcome, Outcome::Pass, "{rep}");

    // With `L₁ = (=)` every table is monotone, so use `≤` on both levels.
    let le2 = fx::le_on(b2.clone());
    let d = pgal_relation::DepRel::constant(b2.clone(), b2.clone(), le2.clone());
    let rep = mono_collapse_check(&le2, &d, 4096).unwrap();
    assert_eq!(rep.outcome, Outcome::Inapplicable);
    assert_eq!(rep.sub_reports[0].find("per_cases").unwrap().outcome, Outcome::Fail);
    assert_eq!(rep.sub_reports[1].outcome, Outcome::Fail);
    assert_eq!(rep.sub_reports[1].outcome, Outcome::Fail);
}
