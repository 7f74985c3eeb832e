use std::sync::Arc;

use pgal_galois::{induced_left_rel, EquivalenceRecord, PartialQuotient};
use pgal_relation::Rel;
use pgal_value::{fun_space, Carrier, FunTable, Value, DEFAULT_CAP};

use crate::basic::{int, ints, nat3};

/// Every list over `elems` of length at most `bound`.
pub fn all_lists(elems: &Carrier, bound: usize) -> Vec<Value> {
    let mut out = vec![Value::List(vec![])];
    let mut layer = vec![Vec::<Value>::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for xs in &layer {
            for e in elems.elements() {
                let mut ys = xs.clone();
                ys.push(e.clone());
                next.push(ys);
            }
        }
        out.extend(next.iter().cloned().map(Value::List));
        layer = next;
    }
    out
}

/// `{0,1,2}`
pub fn u3() -> Arc<Carrier> {
    ints("U3", 0, 2)
}

/// The 40 lists over `{0,1,2}` of length at most 3.
pub fn list3() -> Arc<Carrier> {
    Arc::new(Carrier::new("List3", all_lists(&u3(), 3)))
}

fn fset_of(xs: &[Value]) -> Value {
    let mut s = xs.to_vec();
    s.sort();
    s.dedup();
    Value::cons("fset", s)
}

/// The 8 finite sets over `{0,1,2}`, encoded `fset(sorted elements)`.
pub fn fset3() -> Arc<Carrier> {
    let subsets = (0u8..8).map(|m| {
        Value::cons(
            "fset",
            (0..3).filter(|b| m & (1 << b) != 0).map(Value::Int).collect(),
        )
    });
    Arc::new(Carrier::new("FSet3", subsets))
}

pub fn to_fset() -> FunTable {
    FunTable::from_fn(list3(), fset3(), |v| fset_of(v.as_list().expect("list"))).expect("in range")
}

/// The sorted duplicate-free list of a set.
pub fn to_list_fin() -> FunTable {
    FunTable::from_fn(fset3(), list3(), |v| Value::List(v.cons_args("fset").expect("fset").to_vec()))
        .expect("in range")
}

/// `LFS xs s := to_fset xs = s`.
pub fn lfs() -> Rel {
    let t = to_fset();
    Rel::from_fn(list3(), fset3(), |xs, s| t.at(xs) == s)
}

pub fn quotient_c() -> PartialQuotient {
    PartialQuotient::new(lfs(), to_fset(), to_list_fin()).expect("wiring")
}

/// `LFS_L`: lists with the same elements.
pub fn lfs_l() -> Rel {
    induced_left_rel(&quotient_c())
}

/// `(LFS_L ≡PER (=)) to_fset to_list_fin`.
pub fn record_c() -> EquivalenceRecord {
    EquivalenceRecord::new(lfs_l(), Rel::equality(fset3()), to_fset(), to_list_fin())
        .expect("wiring")
}

/// Maximum of a list, 0 for the empty list.
pub fn max_list() -> FunTable {
    FunTable::from_fn(list3(), nat3(), |v| {
        Value::Int(v.as_list().expect("list").iter().map(int).max().unwrap_or(0))
    })
    .expect("in range")
}

/// Independent oracle for the transported function: fold `max` over the
/// elements of the set, 0 for the empty set.
pub fn max_fset_oracle(s: &Value) -> Value {
    let elems = s.cons_args("fset").expect("fset");
    Value::Int(elems.iter().map(int).fold(0, i64::max))
}

/// Element carrier of the indexing example.
pub fn elems3() -> Arc<Carrier> {
    ints("E", 0, 2)
}

/// The PER `S = {0,1}²`; 2 is outside its field.
pub fn s_per() -> Rel {
    let e = elems3();
    Rel::from_fn(e.clone(), e, |a, b| int(a) < 2 && int(b) < 2)
}

/// `(S ≡PER S) id id`.
pub fn record_s() -> EquivalenceRecord {
    let id = FunTable::identity(elems3());
    EquivalenceRecord::new(s_per(), s_per(), id.clone(), id).expect("wiring")
}

pub fn list_e() -> Arc<Carrier> {
    Arc::new(Carrier::new("ListE", all_lists(&elems3(), 3)))
}

/// Tagged arrays `iarr(e0,...)` of length at most 3.
pub fn arr_e() -> Arc<Carrier> {
    Arc::new(Carrier::new(
        "ArrE",
        all_lists(&elems3(), 3).into_iter().map(|v| {
            Value::cons("iarr", v.as_list().expect("list").to_vec())
        }),
    ))
}

fn items(v: &Value) -> &[Value] {
    v.as_list().or_else(|| v.cons_args("iarr")).expect("list or array")
}

/// Same length and pointwise `S`.
fn pointwise_s(c: Arc<Carrier>) -> Rel {
    let s = s_per();
    Rel::from_fn(c.clone(), c, |a, b| {
        let (xs, ys) = (items(a), items(b));
        xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| s.holds(x, y))
    })
}

pub fn to_arr() -> FunTable {
    FunTable::from_fn(list_e(), arr_e(), |v| Value::cons("iarr", items(v).to_vec())).expect("in range")
}

pub fn to_list() -> FunTable {
    FunTable::from_fn(arr_e(), list_e(), |v| Value::List(items(v).to_vec())).expect("in range")
}

/// Lists and arrays related pointwise by `S`.
pub fn record_index() -> EquivalenceRecord {
    EquivalenceRecord::new(pointwise_s(list_e()), pointwise_s(arr_e()), to_arr(), to_list())
        .expect("wiring")
}

/// `in_bounds xs i := i < length xs`, for lists or arrays.
pub fn in_bounds(c: Arc<Carrier>) -> Rel {
    Rel::from_fn(c, nat3(), |xs, i| (int(i) as usize) < items(xs).len())
}

/// `xs !! i`, or 2 when `i` is out of bounds.
pub fn lookup(xs: &Value, i: &Value) -> Value {
    items(xs).get(int(i) as usize).cloned().unwrap_or(Value::Int(2))
}

/// The curried list indexing function `ListE → (Nat3 → E)`.
pub fn list_index() -> FunTable {
    let space = fun_space(&nat3(), &elems3(), DEFAULT_CAP).expect("27 tables");
    let nat = nat3();
    FunTable::from_fn(list_e(), space, |xs| {
        FunTable::from_fn(nat.clone(), elems3(), |i| lookup(xs, i))
            .expect("in range")
            .to_value()
    })
    .expect("in range")
}
