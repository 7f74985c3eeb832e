use std::sync::Arc;

use pgal_relation::{CheckReport, Rel};
use pgal_value::{Carrier, FunTable, Result, Value};

use crate::EquivalenceRecord;

/// `(T, Abs, Rep)` with `T ⊆ α × β`, `Abs : α → β`, `Rep : β → α`. The
/// defining conditions are checked by [`partial_quotient_check`], not assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialQuotient {
    t: Rel,
    abs: FunTable,
    rep: FunTable,
}

impl PartialQuotient {
    pub fn new(t: Rel, abs: FunTable, rep: FunTable) -> Result<Self> {
        let ctx = "partial quotient";
        abs.dom().expect_same(t.left(), ctx)?;
        abs.cod().expect_same(t.right(), ctx)?;
        rep.dom().expect_same(t.right(), ctx)?;
        rep.cod().expect_same(t.left(), ctx)?;
        Ok(PartialQuotient { t, abs, rep })
    }

    pub fn identity(c: Arc<Carrier>) -> Self {
        PartialQuotient {
            t: Rel::equality(c.clone()),
            abs: FunTable::identity(c.clone()),
            rep: FunTable::identity(c),
        }
    }

    pub fn t(&self) -> &Rel {
        &self.t
    }

    pub fn abs(&self) -> &FunTable {
        &self.abs
    }

    pub fn rep(&self) -> &FunTable {
        &self.rep
    }

    /// `(≈, (=), Abs, Rep)`.
    pub fn as_record(&self) -> EquivalenceRecord {
        EquivalenceRecord::new(
            induced_left_rel(self),
            Rel::equality(self.t.right().clone()),
            self.abs.clone(),
            self.rep.clone(),
        )
        .expect("quotient wiring")
    }
}

/// Right-unique, right-total, and both respectfulness conditions
/// (`T x y ⟶ Abs x = y` and `T (Rep y) y`).
pub fn partial_quotient_check(q: &PartialQuotient) -> CheckReport {
    let t = &q.t;
    let a = |i: usize| t.left().elements()[i].clone();
    let b = |j: usize| t.right().elements()[j].clone();
    let unique = (0..t.left().len()).find_map(|x| match t.row(x) {
        [y1, y2, ..] => Some(vec![a(x), b(*y1 as usize), b(*y2 as usize)]),
        _ => None,
    });
    let total = (0..t.right().len())
        .find(|&y| !t.in_codom_idx(y))
        .map(|y| vec![b(y)]);
    let abs = t
        .index_pairs()
        .find(|&(x, y)| q.abs.apply_idx(x) != y)
        .map(|(x, y)| vec![a(x), b(y)]);
    let rep = (0..t.right().len())
        .find(|&y| !t.holds_idx(q.rep.apply_idx(y), y))
        .map(|y| vec![b(y)]);
    CheckReport::all(
        "partial_quotient",
        vec![
            CheckReport::from_witness("right_unique", unique),
            CheckReport::from_witness("right_total", total),
            CheckReport::from_witness("abs_respects", abs),
            CheckReport::from_witness("rep_respects", rep),
        ],
    )
}

/// `x₁ ≈ x₂ := in_dom T x₁ ∧ in_dom T x₂ ∧ Abs x₁ = Abs x₂`.
///
/// Both arguments are required to be in `in_dom T`, as in the PER of the
/// Lifting package; with only `x₁` constrained, a total `Abs` can relate an
/// element of the domain to one outside it.
pub fn induced_left_rel(q: &PartialQuotient) -> Rel {
    let t = &q.t;
    Rel::from_index_fn(t.left().clone(), t.left().clone(), |x1, x2| {
        t.in_dom_idx(x1) && t.in_dom_idx(x2) && q.abs.apply_idx(x1) == q.abs.apply_idx(x2)
    })
}

/// Values of α in `in_dom T`.
pub fn quotient_domain(q: &PartialQuotient) -> Vec<Value> {
    (0..q.t.left().len())
        .filter(|&i| q.t.in_dom_idx(i))
        .map(|i| q.t.left().elements()[i].clone())
        .collect()
}
