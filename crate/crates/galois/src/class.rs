use pgal_relation::{
    dep_fun_relator, order_property_on_field, point_property, CheckReport, DepRel, OrderKind,
    PointKind, Pred, Rel, RelatorKind,
};
use pgal_value::{FunTable, Result, Value};

use crate::{EquivalenceRecord, GaloisClass};

/// `(η, ε) = (r ∘ l, l ∘ r)`.
pub fn unit_counit(l: &FunTable, r: &FunTable) -> Result<(FunTable, FunTable)> {
    Ok((l.then(r)?, r.then(l)?))
}

/// `Galois ≤L ≤R r x y := in_codom ≤R y ∧ x ≤L r y`, a relation on α × β.
pub fn galois_relator(left: &Rel, right: &Rel, r: &FunTable) -> Result<Rel> {
    let ctx = "galois_relator";
    left.expect_homogeneous(ctx)?;
    right.expect_homogeneous(ctx)?;
    r.dom().expect_same(right.left(), ctx)?;
    r.cod().expect_same(left.left(), ctx)?;
    Ok(Rel::from_index_fn(
        left.left().clone(),
        right.left().clone(),
        |x, y| right.in_codom_idx(y) && left.holds_idx(x, r.apply_idx(y)),
    ))
}

/// The dual: `in_dom ≤L x ∧ l x ≤R y`.
pub fn flip_galois_relator(left: &Rel, right: &Rel, l: &FunTable) -> Result<Rel> {
    let ctx = "flip_galois_relator";
    left.expect_homogeneous(ctx)?;
    right.expect_homogeneous(ctx)?;
    l.dom().expect_same(left.left(), ctx)?;
    l.cod().expect_same(right.left(), ctx)?;
    Ok(Rel::from_index_fn(
        left.left().clone(),
        right.left().clone(),
        |x, y| left.in_dom_idx(x) && right.holds_idx(l.apply_idx(x), y),
    ))
}

impl EquivalenceRecord {
    /// `⪅L`, the Galois relator of the record.
    pub fn galois_rel(&self) -> Rel {
        galois_relator(self.left(), self.right(), self.r()).expect("record wiring")
    }

    pub fn unit(&self) -> FunTable {
        self.l().then(self.r()).expect("record wiring")
    }

    pub fn counit(&self) -> FunTable {
        self.r().then(self.l()).expect("record wiring")
    }
}

fn pair_at(e: &EquivalenceRecord, x: usize, y: usize) -> Vec<Value> {
    vec![e.alpha().elements()[x].clone(), e.beta().elements()[y].clone()]
}

/// `∀x y. x ⪅ y ⟶ l x ≤R y`
fn half_left(e: &EquivalenceRecord) -> CheckReport {
    let (lr, rr) = (e.left(), e.right());
    let bad = (0..e.alpha().len())
        .flat_map(|x| (0..e.beta().len()).map(move |y| (x, y)))
        .find(|&(x, y)| {
            rr.in_codom_idx(y)
                && lr.holds_idx(x, e.r().apply_idx(y))
                && !rr.holds_idx(e.l().apply_idx(x), y)
        });
    CheckReport::from_witness(GaloisClass::HalfLeft.name(), bad.map(|(x, y)| pair_at(e, x, y)))
}

/// `∀x y. x ⪆ y ⟶ x ≤L r y`
fn half_right(e: &EquivalenceRecord) -> CheckReport {
    let (lr, rr) = (e.left(), e.right());
    let bad = (0..e.alpha().len())
        .flat_map(|x| (0..e.beta().len()).map(move |y| (x, y)))
        .find(|&(x, y)| {
            lr.in_dom_idx(x)
                && rr.holds_idx(e.l().apply_idx(x), y)
                && !lr.holds_idx(x, e.r().apply_idx(y))
        });
    CheckReport::from_witness(GaloisClass::HalfRight.name(), bad.map(|(x, y)| pair_at(e, x, y)))
}

fn mono(name: &str, from: &Rel, to: &Rel, f: &FunTable) -> CheckReport {
    let s = DepRel::constant(from.left().clone(), from.right().clone(), to.clone());
    dep_fun_relator(RelatorKind::MonoFun, from, &s, f, f)
        .expect("record wiring")
        .renamed(name)
}

fn field_order(name: &str, kind: OrderKind, r: &Rel) -> CheckReport {
    order_property_on_field(kind, r)
        .expect("record wiring")
        .renamed(name)
}

fn prefixed(mut rep: CheckReport, prefix: &str) -> CheckReport {
    rep.property = format!("{prefix}{}", rep.property);
    rep.sub_reports = rep
        .sub_reports
        .into_iter()
        .map(|s| prefixed(s, prefix))
        .collect();
    rep
}

/// Evaluates a class predicate exactly as defined. Failing reports name the
/// failing clause, so `first_failure` points at e.g. `half_galois_left`.
pub fn galois_class_check(class: GaloisClass, e: &EquivalenceRecord) -> CheckReport {
    let name = class.name();
    match class {
        GaloisClass::HalfLeft => half_left(e),
        GaloisClass::HalfRight => half_right(e),
        GaloisClass::GaloisProp => CheckReport::all(name, vec![half_left(e), half_right(e)]),
        GaloisClass::Connection => CheckReport::all(
            name,
            vec![
                half_left(e),
                half_right(e),
                mono("mono_l", e.left(), e.right(), e.l()),
                mono("mono_r", e.right(), e.left(), e.r()),
            ],
        ),
        GaloisClass::GaloisEquiv => CheckReport::all(
            name,
            vec![
                galois_class_check(GaloisClass::Connection, e),
                prefixed(
                    galois_class_check(GaloisClass::Connection, &e.flipped()),
                    "reverse_",
                ),
            ],
        ),
        GaloisClass::OrderEquiv => {
            let field_l = Pred::in_field(e.left()).expect("homogeneous");
            let field_r = Pred::in_field(e.right()).expect("homogeneous");
            CheckReport::all(
                name,
                vec![
                    mono("mono_l", e.left(), e.right(), e.l()),
                    mono("mono_r", e.right(), e.left(), e.r()),
                    point_property(PointKind::RelEquivalenceOn, &field_l, e.left(), &e.unit())
                        .expect("record wiring")
                        .renamed("unit_rel_equivalence_on"),
                    point_property(PointKind::RelEquivalenceOn, &field_r, e.right(), &e.counit())
                        .expect("record wiring")
                        .renamed("counit_rel_equivalence_on"),
                ],
            )
        }
        GaloisClass::PreEquiv | GaloisClass::PerEquiv => {
            let (kind, tag) = if class == GaloisClass::PreEquiv {
                (OrderKind::PreorderOn, "preorder_on")
            } else {
                (OrderKind::PerOn, "per_on")
            };
            CheckReport::all(
                name,
                vec![
                    galois_class_check(GaloisClass::GaloisEquiv, e),
                    field_order(&format!("left_{tag}"), kind, e.left()),
                    field_order(&format!("right_{tag}"), kind, e.right()),
                ],
            )
        }
    }
}
