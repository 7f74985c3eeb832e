use pgal_fixtures::random::{random_fun, random_per_equiv, seeded, small_carrier};
use pgal_funrel::random::random_closure_input;
use pgal_funrel::*;
use pgal_galois::{galois_class_check, GaloisClass};
use pgal_relation::Outcome;
use proptest::prelude::*;

const CAP: usize = 4096;
const STARS: [GaloisClass; 3] = [GaloisClass::PreEquiv, GaloisClass::PerEquiv, GaloisClass::Connection];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn maps_follow_pointwise_formulas(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let input = random_closure_input(&mut rng, CAP);
        let e1 = &input.e1;
        let f = random_fun(&mut rng, e1.alpha(), input.l2.base_left());
        let g = random_fun(&mut rng, e1.beta(), input.r2.base_left());
        let lf = input.l_map(&f).unwrap();
        for xp in 0..e1.beta().len() {
            let x = e1.r().apply_idx(xp);
            let y = input.l2f.at_idx(xp, x).apply_idx(f.apply_idx(x));
            prop_assert_eq!(lf.apply_idx(xp), y);
        }
        let rg = input.r_map(&g).unwrap();
        for x in 0..e1.alpha().len() {
            let xp = e1.l().apply_idx(x);
            let y = input.r2f.at_idx(x, xp).apply_idx(g.apply_idx(xp));
            prop_assert_eq!(rg.apply_idx(x), y);
        }
    }

    #[test]
    fn non_dependent_maps_are_compositions(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let (a1, a2, b1, b2) = (
            small_carrier("A1", 3), small_carrier("A2", 2),
            small_carrier("B1", 2), small_carrier("B2", 3),
        );
        let e1 = random_per_equiv(&mut rng, &a1, &a2);
        let e2 = random_per_equiv(&mut rng, &b1, &b2);
        let input = DepFunClosureInput::non_dependent(e1.clone(), &e2, CAP).unwrap();
        let out = build_dep_fun_closure(&input).unwrap();
        for f in &out.space_l {
            let expect = e1.r().then(f).unwrap().then(e2.l()).unwrap();
            prop_assert_eq!(input.l_map(f).unwrap(), expect);
        }
        for g in &out.space_r {
            let expect = e1.l().then(g).unwrap().then(e2.r()).unwrap();
            prop_assert_eq!(input.r_map(g).unwrap(), expect);
        }
    }

    #[test]
    fn closure_theorems_are_sound(seed in any::<u64>()) {
        let input = random_closure_input(&mut seeded(seed), CAP);
        for star in STARS {
            let thm = verify_closure_theorem(&input, star).unwrap();
            prop_assert_ne!(thm.outcome, Outcome::Fail, "{}: {:?}", star.name(), thm.first_failure());
        }
    }

    #[test]
    fn similarity_is_sound(seed in any::<u64>()) {
        let input = random_closure_input(&mut seeded(seed), CAP);
        let out = build_dep_fun_closure(&input).unwrap();
        for v in [SimilarityVariant::PreEquiv, SimilarityVariant::Connection] {
            let rep = similarity_check(&input, &out, v);
            prop_assert_ne!(rep.outcome, Outcome::Fail, "{:?}", rep.first_failure());
        }
    }

    #[test]
    fn mono_collapse_is_sound(seed in any::<u64>()) {
        let input = random_closure_input(&mut seeded(seed), CAP);
        let rep = mono_collapse_check(input.e1.left(), &input.l2, CAP).unwrap();
        prop_assert_ne!(rep.outcome, Outcome::Fail);
    }

    #[test]
    fn transported_terms_stay_related(seed in any::<u64>()) {
        let input = random_closure_input(&mut seeded(seed), CAP);
        let thm = verify_closure_theorem(&input, GaloisClass::PerEquiv).unwrap();
        prop_assume!(thm.outcome == Outcome::Pass);
        let out = build_dep_fun_closure(&input).unwrap();
        let e = &out.record;
        for a in 0..e.alpha().len() {
            if e.left().in_field_idx(a) {
                let back = e.r().apply_idx(e.l().apply_idx(a));
                prop_assert!(e.left().holds_idx(a, back));
            }
        }
        for b in 0..e.beta().len() {
            if e.right().in_field_idx(b) {
                let there = e.l().apply_idx(e.r().apply_idx(b));
                prop_assert!(e.right().holds_idx(there, b));
            }
        }
    }
}

/// Guards against a generator that never meets the hypotheses.
#[test]
fn sweep_meets_hypotheses_often() {
    let mut met = [0usize; 3];
    let mut holds_anyway = 0;
    for seed in 0..200 {
        let input = random_closure_input(&mut seeded(seed), CAP);
        for (k, star) in STARS.into_iter().enumerate() {
            let thm = verify_closure_theorem(&input, star).unwrap();
            assert_ne!(thm.outcome, Outcome::Fail, "seed {seed}");
            if thm.outcome == Outcome::Pass {
                met[k] += 1;
            } else if thm.sub_reports[1].verdict() {
                holds_anyway += 1;
            }
        }
    }
    assert!(met.iter().all(|&m| m >= 20), "{met:?}");
    assert!(holds_anyway > 0);
}

#[test]
fn built_record_matches_class_check_of_components_on_identity() {
    let out = build_dep_fun_closure(&pgal_funrel::examples::identity_b2()).unwrap();
    for star in STARS {
        assert!(galois_class_check(star, &out.record).verdict());
    }
}
