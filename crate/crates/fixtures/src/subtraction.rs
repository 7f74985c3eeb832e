use std::sync::Arc;

use pgal_galois::EquivalenceRecord;
use pgal_relation::Rel;
use pgal_value::{fun_space, Carrier, FunTable, Value, DEFAULT_CAP};

use crate::basic::{int, int5, ints, to_int_on, to_nat_on, zpos_on};

/// `geq x y := x ≥ y` on a carrier of integers.
pub fn geq_on(c: Arc<Carrier>) -> Rel {
    Rel::from_fn(c.clone(), c, |a, b| int(a) >= int(b))
}

/// `i₂ ↦ i₁ − i₂` clamped into `c`. Only in-field arguments matter, and for
/// those the result is exact.
pub fn minus_int_table(c: &Arc<Carrier>, i1: i64) -> FunTable {
    let lo = int(c.elements().first().expect("nonempty"));
    let hi = int(c.elements().last().expect("nonempty"));
    FunTable::from_fn(c.clone(), c.clone(), |v| Value::Int((i1 - int(v)).clamp(lo, hi)))
        .expect("clamped")
}

/// Curried `(−ℤ) : Int5 → (Int5 → Int5)`.
pub fn minus_int() -> FunTable {
    let c = int5();
    let space = fun_space(&c, &c, DEFAULT_CAP).expect("3125 tables");
    FunTable::from_fn(c.clone(), space, |i1| minus_int_table(&c, int(i1)).to_value())
        .expect("in range")
}

/// Oracle: `n₁ −ℕ n₂ = max(n₁ − n₂, 0)`.
pub fn minus_nat_oracle(n1: i64, n2: i64) -> i64 {
    (n1 - n2).max(0)
}

/// `{-1,0,1}`, a reduced integer carrier whose function spaces fit the cap.
pub fn int3() -> Arc<Carrier> {
    ints("Int3", -1, 1)
}

pub fn nat2() -> Arc<Carrier> {
    ints("Nat2", 0, 1)
}

/// Fixture B over the reduced carriers.
pub fn record_b_small() -> EquivalenceRecord {
    EquivalenceRecord::new(
        zpos_on(int3()),
        Rel::equality(nat2()),
        to_nat_on(int3(), nat2()),
        to_int_on(nat2(), int3()),
    )
    .expect("wiring")
}

