use std::sync::Arc;

use pgal_compose::*;
use pgal_fixtures as fx;
use pgal_galois::{induced_left_rel, EquivalenceRecord, GaloisClass, PartialQuotient};
use pgal_relation::{rel_compose, Outcome, Rel};
use pgal_value::Carrier;

fn b_then_rename() -> CompositionInput {
    CompositionInput::new(fx::record_b(), fx::record_rename()).unwrap()
}

fn c_then_identity() -> CompositionInput {
    CompositionInput::new(fx::record_c(), EquivalenceRecord::identity(fx::fset3())).unwrap()
}

fn identity_chain() -> CompositionInput {
    let id = fx::identity_record();
    CompositionInput::new(id.clone(), id).unwrap()
}

/// Two PER identities on `{0,1,2}` whose partitions `{0,1},{2}` and
/// `{0},{1,2}` do not commute.
fn non_commuting() -> CompositionInput {
    let c = Arc::new(Carrier::ints("C", 0, 2));
    let per = |blocks: [usize; 3]| Rel::from_index_fn(c.clone(), c.clone(), |i, j| blocks[i] == blocks[j]);
    let id = pgal_value::FunTable::identity(c.clone());
    let e1 = EquivalenceRecord::new(per([0, 0, 1]), per([0, 0, 1]), id.clone(), id.clone()).unwrap();
    let e2 = EquivalenceRecord::new(per([0, 1, 1]), per([0, 1, 1]), id.clone(), id).unwrap();
    CompositionInput::new(e1, e2).unwrap()
}

#[test]
fn b_then_rename_builds_expected_record() {
    let e = build_composition(&b_then_rename()).unwrap();
    assert_eq!(*e.left(), fx::zpos());
    assert_eq!(*e.right(), Rel::equality(fx::nat3_renamed()));
    assert_eq!(*e.l(), fx::to_nat().then(&fx::rename()).unwrap());
    assert_eq!(*e.r(), fx::unrename().then(&fx::to_int()).unwrap());
    let thm = verify_comp_theorem(&b_then_rename(), CompStar::PerEquiv).unwrap();
    assert_eq!(thm.outcome, Outcome::Pass, "{thm}");
}

#[test]
fn identity_chain_examples() {
    let input = identity_chain();
    assert_eq!(build_composition(&input).unwrap(), fx::identity_record());
    assert_eq!(verify_comp_theorem(&input, CompStar::PreEquiv).unwrap().outcome, Outcome::Pass);
    assert_eq!(verify_comp_coincide(&input, GaloisClass::OrderEquiv).unwrap().outcome, Outcome::Pass);
    let sim = comp_similarity_check(&input, SimilarityVariant::PreEquiv).unwrap();
    assert_eq!(sim.outcome, Outcome::Pass);
}

#[test]
fn quotient_then_identity_gives_induced_relation() {
    let e = build_composition(&c_then_identity()).unwrap();
    assert_eq!(*e.left(), induced_left_rel(&fx::quotient_c()));
    for v in [SimilarityVariant::PreEquiv, SimilarityVariant::Connection] {
        let sim = comp_similarity_check(&c_then_identity(), v).unwrap();
        assert_eq!(sim.outcome, Outcome::Pass, "{sim}");
    }
}

#[test]
fn broken_commutation_is_unmet_hypothesis() {
    let input = non_commuting();
    let thm = verify_comp_theorem(&input, CompStar::PerEquiv).unwrap();
    assert_eq!(thm.outcome, Outcome::Inapplicable);
    let comm = thm.find("commutation").unwrap();
    assert_eq!(comm.witness_text().as_deref(), Some("(0,2)"));
    assert!(thm.sub_reports[0].find("component_1_per_equiv").unwrap().verdict());
}

#[test]
fn coinciding_middles() {
    let thm = verify_comp_coincide(&b_then_rename(), GaloisClass::PerEquiv).unwrap();
    assert_eq!(thm.outcome, Outcome::Pass);
    let thm = verify_comp_coincide(&non_commuting(), GaloisClass::PerEquiv).unwrap();
    assert_eq!(thm.outcome, Outcome::Inapplicable);
    assert!(thm.find("middle_relations_equal").unwrap().is_fail());
}

#[test]
fn similarity_for_b_then_rename() {
    let sim = comp_similarity_check(&b_then_rename(), SimilarityVariant::PreEquiv).unwrap();
    assert_eq!(sim.outcome, Outcome::Pass);
    let e = b_then_rename();
    let lhs = build_composition(&e).unwrap().galois_rel();
    let rhs = rel_compose(&e.e1.galois_rel(), &e.e2.galois_rel()).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(lhs.len(), 3);
}

#[test]
fn lifting_comparison_examples() {
    let cases = [
        (fx::quotient_c(), PartialQuotient::identity(fx::fset3())),
        (fx::quotient_b(), fx::quotient_rename()),
        (PartialQuotient::identity(fx::b2()), PartialQuotient::identity(fx::b2())),
    ];
    for (q1, q2) in cases {
        let rep = lifting_comparison_check(&q1, &q2).unwrap();
        assert_eq!(rep.outcome, Outcome::Pass, "{rep}");
    }
}
