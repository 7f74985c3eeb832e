use pgal_value::{FunTable, Result, Value};

use crate::{CheckReport, Pred, Rel};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    ReflexiveOn,
    TransitiveOn,
    SymmetricOn,
    PreorderOn,
    PerOn,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::ReflexiveOn => "reflexive_on",
            OrderKind::TransitiveOn => "transitive_on",
            OrderKind::SymmetricOn => "symmetric_on",
            OrderKind::PreorderOn => "preorder_on",
            OrderKind::PerOn => "per_on",
        }
    }
}

fn check_wiring(p: &Pred, r: &Rel, context: &str) -> Result<()> {
    r.expect_homogeneous(context)?;
    p.carrier().expect_same(r.left(), context)
}

/// Witnesses are `(x)` for reflexivity, `(x,y)` for symmetry and `(x,y,z)`
/// for transitivity; all are canonically smallest.
pub fn order_property(kind: OrderKind, p: &Pred, r: &Rel) -> Result<CheckReport> {
    check_wiring(p, r, kind.name())?;
    let el = |i: usize| r.left().elements()[i].clone();
    Ok(match kind {
        OrderKind::ReflexiveOn => {
            let bad = (0..r.left().len()).find(|&i| p.contains_idx(i) && !r.holds_idx(i, i));
            CheckReport::from_witness(kind.name(), bad.map(|i| vec![el(i)]))
        }
        OrderKind::SymmetricOn => {
            let bad = r
                .index_pairs()
                .find(|&(i, j)| p.contains_idx(i) && p.contains_idx(j) && !r.holds_idx(j, i));
            CheckReport::from_witness(kind.name(), bad.map(|(i, j)| vec![el(i), el(j)]))
        }
        OrderKind::TransitiveOn => {
            let bad = transitive_witness(p, r);
            CheckReport::from_witness(
                kind.name(),
                bad.map(|(i, j, k)| vec![el(i), el(j), el(k)]),
            )
        }
        OrderKind::PreorderOn => CheckReport::all(
            kind.name(),
            vec![
                order_property(OrderKind::TransitiveOn, p, r)?,
                order_property(OrderKind::ReflexiveOn, p, r)?,
            ],
        ),
        OrderKind::PerOn => CheckReport::all(
            kind.name(),
            vec![
                order_property(OrderKind::TransitiveOn, p, r)?,
                order_property(OrderKind::SymmetricOn, p, r)?,
            ],
        ),
    })
}

fn transitive_witness(p: &Pred, r: &Rel) -> Option<(usize, usize, usize)> {
    for i in (0..r.left().len()).filter(|&i| p.contains_idx(i)) {
        for &j in r.row(i) {
            let j = j as usize;
            if !p.contains_idx(j) {
                continue;
            }
            for &k in r.row(j) {
                let k = k as usize;
                if p.contains_idx(k) && !r.holds_idx(i, k) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Unrelativised form: the property on the full carrier.
pub fn order_property_full(kind: OrderKind, r: &Rel) -> Result<CheckReport> {
    order_property(kind, &Pred::full(r.left().clone()), r)
}

/// The property relativised to `in_field r`.
pub fn order_property_on_field(kind: OrderKind, r: &Rel) -> Result<CheckReport> {
    order_property(kind, &Pred::in_field(r)?, r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    InflationaryOn,
    DeflationaryOn,
    RelEquivalenceOn,
}

impl PointKind {
    pub fn name(self) -> &'static str {
        match self {
            PointKind::InflationaryOn => "inflationary_on",
            PointKind::DeflationaryOn => "deflationary_on",
            PointKind::RelEquivalenceOn => "rel_equivalence_on",
        }
    }
}

/// Inflationary: `P x ⟶ R x (f x)`. Deflationary: `P x ⟶ R (f x) x`.
pub fn point_property(kind: PointKind, p: &Pred, r: &Rel, f: &FunTable) -> Result<CheckReport> {
    check_wiring(p, r, kind.name())?;
    f.dom().expect_same(r.left(), kind.name())?;
    f.cod().expect_same(r.left(), kind.name())?;
    let find = |infl: bool| -> Option<Vec<Value>> {
        (0..r.left().len())
            .find(|&i| {
                let fi = f.apply_idx(i);
                p.contains_idx(i) && !(if infl { r.holds_idx(i, fi) } else { r.holds_idx(fi, i) })
            })
            .map(|i| vec![r.left().elements()[i].clone()])
    };
    Ok(match kind {
        PointKind::InflationaryOn => CheckReport::from_witness(kind.name(), find(true)),
        PointKind::DeflationaryOn => CheckReport::from_witness(kind.name(), find(false)),
        PointKind::RelEquivalenceOn => CheckReport::all(
            kind.name(),
            vec![
                CheckReport::from_witness(PointKind::InflationaryOn.name(), find(true)),
                CheckReport::from_witness(PointKind::DeflationaryOn.name(), find(false)),
            ],
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::restricted_eq;
    use pgal_value::Carrier;
    use std::sync::Arc;

    fn n3() -> Arc<Carrier> {
        Arc::new(Carrier::ints("N3", 0, 2))
    }

    fn int5() -> Arc<Carrier> {
        Arc::new(Carrier::ints("Int5", -2, 2))
    }

    fn zpos() -> Rel {
        restricted_eq(&Pred::from_fn(int5(), |v| v.as_int().unwrap() >= 0))
    }

    #[test]
    fn order_examples() {
        let b2 = Arc::new(Carrier::ints("B2", 0, 1));
        let eq = Rel::equality(b2.clone());
        assert!(order_property(OrderKind::ReflexiveOn, &Pred::full(b2), &eq).unwrap().verdict());
        assert!(order_property_on_field(OrderKind::PerOn, &zpos()).unwrap().verdict());
        let r = Rel::new(
            n3(),
            n3(),
            [(0, 1), (1, 2)].map(|(a, b)| (Value::Int(a), Value::Int(b))),
        )
        .unwrap();
        let rep = order_property_full(OrderKind::TransitiveOn, &r).unwrap();
        assert_eq!(rep.witness, Some(vec![Value::Int(0), Value::Int(1), Value::Int(2)]));
    }

    #[test]
    fn zpos_is_not_reflexive_on_the_full_carrier() {
        let rep = order_property_full(OrderKind::PreorderOn, &zpos()).unwrap();
        assert_eq!(rep.witness, Some(vec![Value::Int(-2)]));
        assert_eq!(rep.first_failure().unwrap().property, "reflexive_on");
    }

    #[test]
    fn point_examples() {
        let z = zpos();
        let field = Pred::in_field(&z).unwrap();
        let id = FunTable::identity(int5());
        assert!(point_property(PointKind::InflationaryOn, &field, &z, &id).unwrap().verdict());
        // to_int ∘ to_nat on the integer side is max(i, 0)
        let eta = FunTable::from_fn(int5(), int5(), |v| Value::Int(v.as_int().unwrap().max(0))).unwrap();
        assert!(point_property(PointKind::RelEquivalenceOn, &field, &z, &eta).unwrap().verdict());
        let le3 = Rel::from_fn(n3(), n3(), |a, b| a <= b);
        let zero = FunTable::constant(n3(), n3(), Value::Int(0)).unwrap();
        assert!(point_property(PointKind::DeflationaryOn, &Pred::full(n3()), &le3, &zero)
            .unwrap()
            .verdict());
        let rep = point_property(PointKind::InflationaryOn, &Pred::full(n3()), &le3, &zero).unwrap();
        assert_eq!(rep.witness, Some(vec![Value::Int(1)]));
    }
}
