use pgal_relation::{order_property_full, rel_equal, CheckReport, OrderKind, Rel};

use crate::{
    flip_galois_relator, galois_class_check, galois_relator, induced_left_rel,
    partial_quotient_check, EquivalenceRecord, GaloisClass, PartialQuotient,
};

pub enum LemmaSubject<'a> {
    Record(&'a EquivalenceRecord),
    Quotient(&'a PartialQuotient),
}

/// `galois_prop ⟹ Galois ≤L ≤R r = flip`.
pub fn galreliffalt(e: &EquivalenceRecord) -> CheckReport {
    let conclusion = rel_equal(
        "galois_eq_flip",
        &e.galois_rel(),
        &flip_galois_relator(e.left(), e.right(), e.l()).expect("record wiring"),
    )
    .expect("same carriers");
    CheckReport::theorem(
        "galreliffalt",
        vec![galois_class_check(GaloisClass::GaloisProp, e)],
        conclusion,
    )
}

/// Order equivalence on transitive relations is a Galois equivalence.
pub fn order_equiv_to_galois_equiv(e: &EquivalenceRecord) -> CheckReport {
    CheckReport::theorem(
        "order_equiv_to_galois_equiv",
        vec![
            galois_class_check(GaloisClass::OrderEquiv, e),
            order_property_full(OrderKind::TransitiveOn, e.left())
                .expect("homogeneous")
                .renamed("left_transitive"),
            order_property_full(OrderKind::TransitiveOn, e.right())
                .expect("homogeneous")
                .renamed("right_transitive"),
        ],
        galois_class_check(GaloisClass::GaloisEquiv, e),
    )
}

/// A Galois equivalence between relations reflexive on their fields is an
/// order equivalence.
pub fn galois_equiv_to_order_equiv(e: &EquivalenceRecord) -> CheckReport {
    use pgal_relation::order_property_on_field as on_field;
    CheckReport::theorem(
        "galois_equiv_to_order_equiv",
        vec![
            galois_class_check(GaloisClass::GaloisEquiv, e),
            on_field(OrderKind::ReflexiveOn, e.left())
                .expect("homogeneous")
                .renamed("left_reflexive_on_field"),
            on_field(OrderKind::ReflexiveOn, e.right())
                .expect("homogeneous")
                .renamed("right_reflexive_on_field"),
        ],
        galois_class_check(GaloisClass::OrderEquiv, e),
    )
}

/// For a partial quotient: `T = Galois ≈ (=) Rep`.
pub fn galrelpartquoteq(q: &PartialQuotient) -> CheckReport {
    let eq = Rel::equality(q.t().right().clone());
    let g = galois_relator(&induced_left_rel(q), &eq, q.rep()).expect("quotient wiring");
    CheckReport::theorem(
        "galrelpartquoteq",
        vec![partial_quotient_check(q)],
        rel_equal("t_eq_galois", q.t(), &g).expect("same carriers"),
    )
}

/// Partial quotient with induced `≈` iff `(≈ ≡PER (=)) Abs Rep`.
pub fn genpartquot(q: &PartialQuotient) -> CheckReport {
    let quot = partial_quotient_check(q);
    let per = galois_class_check(GaloisClass::PerEquiv, &q.as_record());
    let agree = quot.verdict() == per.verdict();
    CheckReport::from_bool("genpartquot", agree)
        .with_detail(format!(
            "partial_quotient={} per_equiv={}",
            quot.outcome, per.outcome
        ))
        .with_subs(vec![quot, per])
}

pub fn galois_lemma_suite(subject: LemmaSubject<'_>) -> CheckReport {
    match subject {
        LemmaSubject::Record(e) => CheckReport::all(
            "galois_lemmas",
            vec![
                galreliffalt(e),
                order_equiv_to_galois_equiv(e),
                galois_equiv_to_order_equiv(e),
            ],
        ),
        LemmaSubject::Quotient(q) => {
            let e = q.as_record();
            CheckReport::all(
                "galois_lemmas",
                vec![
                    galrelpartquoteq(q),
                    genpartquot(q),
                    galreliffalt(&e),
                    order_equiv_to_galois_equiv(&e),
                    galois_equiv_to_order_equiv(&e),
                ],
            )
        }
    }
}
