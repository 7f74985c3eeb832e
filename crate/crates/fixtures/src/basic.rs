use std::sync::Arc;

use pgal_galois::{EquivalenceRecord, PartialQuotient};
use pgal_relation::{restricted_eq, Pred, Rel};
use pgal_value::{Carrier, FunTable, Value};

pub fn ints(name: &str, lo: i64, hi: i64) -> Arc<Carrier> {
    Arc::new(Carrier::ints(name, lo, hi))
}

pub fn int(v: &Value) -> i64 {
    v.as_int().expect("integer value")
}

pub fn b2() -> Arc<Carrier> {
    ints("B2", 0, 1)
}

/// `{-2..2}`
pub fn int5() -> Arc<Carrier> {
    ints("Int5", -2, 2)
}

pub fn nat3() -> Arc<Carrier> {
    ints("Nat3", 0, 2)
}

pub fn identity_record() -> EquivalenceRecord {
    EquivalenceRecord::identity(b2())
}

/// Restricted equality on the non-negative integers of `c`.
pub fn zpos_on(c: Arc<Carrier>) -> Rel {
    restricted_eq(&Pred::from_fn(c, |v| int(v) >= 0))
}

pub fn zpos() -> Rel {
    zpos_on(int5())
}

/// `max(i, 0)`, the totalised conversion.
pub fn to_nat_on(ints: Arc<Carrier>, nats: Arc<Carrier>) -> FunTable {
    FunTable::from_fn(ints, nats, |v| Value::Int(int(v).max(0))).expect("in range")
}

pub fn to_int_on(nats: Arc<Carrier>, ints: Arc<Carrier>) -> FunTable {
    FunTable::from_fn(nats, ints, Clone::clone).expect("naturals are integers")
}

pub fn to_nat() -> FunTable {
    to_nat_on(int5(), nat3())
}

pub fn to_int() -> FunTable {
    to_int_on(nat3(), int5())
}

/// Fixture B: `(Zpos ≡PER (=)) to_nat to_int`.
pub fn record_b() -> EquivalenceRecord {
    EquivalenceRecord::new(zpos(), Rel::equality(nat3()), to_nat(), to_int()).expect("wiring")
}

/// Fixture B with `l` replaced by the constant 0.
pub fn record_b_broken() -> EquivalenceRecord {
    let zero = FunTable::constant(int5(), nat3(), Value::Int(0)).expect("0 ∈ Nat3");
    record_b().with_maps(zero, to_int()).expect("wiring")
}

/// `ZN i n := i = to_int n`.
pub fn zn() -> Rel {
    Rel::from_fn(int5(), nat3(), |i, n| i == n)
}

pub fn quotient_b() -> PartialQuotient {
    PartialQuotient::new(zn(), to_nat(), to_int()).expect("wiring")
}

/// `{0..3}`
pub fn n4() -> Arc<Carrier> {
    ints("N4", 0, 3)
}

/// `{0,1}` ordered, the target of Fixture E.
pub fn n2() -> Arc<Carrier> {
    ints("N2", 0, 1)
}

pub fn le_on(c: Arc<Carrier>) -> Rel {
    Rel::from_fn(c.clone(), c, |a, b| a <= b)
}

pub fn halve() -> FunTable {
    FunTable::from_fn(n4(), n2(), |v| Value::Int(int(v) / 2)).expect("in range")
}

/// `y ↦ 2y + 1`
pub fn double_plus_one() -> FunTable {
    FunTable::from_fn(n2(), n4(), |v| Value::Int(2 * int(v) + 1)).expect("in range")
}

/// Fixture E: a Galois connection that is not a Galois equivalence.
pub fn record_e() -> EquivalenceRecord {
    EquivalenceRecord::new(le_on(n4()), le_on(n2()), halve(), double_plus_one()).expect("wiring")
}

/// `Nat3′`: tagged copies `r(n)` of `Nat3`.
pub fn nat3_renamed() -> Arc<Carrier> {
    Arc::new(Carrier::new(
        "Nat3r",
        (0..=2).map(|n| Value::cons("r", vec![Value::Int(n)])),
    ))
}

pub fn rename() -> FunTable {
    FunTable::from_fn(nat3(), nat3_renamed(), |v| Value::cons("r", vec![v.clone()])).expect("tagged")
}

pub fn unrename() -> FunTable {
    FunTable::from_fn(nat3_renamed(), nat3(), |v| v.cons_args("r").expect("tagged")[0].clone())
        .expect("untagged")
}

/// `(=Nat3 ≡PER =Nat3′) rename unrename`.
pub fn record_rename() -> EquivalenceRecord {
    EquivalenceRecord::new(
        Rel::equality(nat3()),
        Rel::equality(nat3_renamed()),
        rename(),
        unrename(),
    )
    .expect("wiring")
}

/// The graph of the renaming as a partial quotient.
pub fn quotient_rename() -> PartialQuotient {
    let t = Rel::from_fn(nat3(), nat3_renamed(), |n, m| m.cons_args("r").unwrap()[0] == *n);
    PartialQuotient::new(t, rename(), unrename()).expect("wiring")
}
