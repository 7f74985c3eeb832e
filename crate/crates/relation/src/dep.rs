use std::sync::Arc;

use pgal_value::{Carrier, Error, FunTable, Result, Value};

use crate::Rel;

/// Dense `(param1, param2)` index into a list of distinct cases. Slot 0 is
/// the default.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Slots {
    param1: Arc<Carrier>,
    param2: Arc<Carrier>,
    slot: Vec<u32>,
}

impl Slots {
    fn new(param1: Arc<Carrier>, param2: Arc<Carrier>) -> Self {
        let slot = vec![0; param1.len() * param2.len()];
        Slots {
            param1,
            param2,
            slot,
        }
    }

    fn at(&self, i: usize, j: usize) -> usize {
        self.slot[i * self.param2.len() + j] as usize
    }

    fn locate(&self, x: &Value, y: &Value) -> Result<(usize, usize)> {
        Ok((self.param1.require(x)?, self.param2.require(y)?))
    }

    /// Non-default positions in canonical order.
    fn overridden(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n2 = self.param2.len();
        self.slot
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(move |(k, &s)| (k / n2, k % n2, s as usize))
    }
}

/// Stores `item` in `items` unless an equal one exists; returns its slot.
fn intern<T: PartialEq>(items: &mut Vec<T>, item: T) -> u32 {
    match items.iter().position(|t| *t == item) {
        Some(k) => k as u32,
        None => {
            items.push(item);
            (items.len() - 1) as u32
        }
    }
}

/// A relation family indexed by a parameter pair, such as `L₂ x₁ x₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DepRel {
    slots: Slots,
    base_left: Arc<Carrier>,
    base_right: Arc<Carrier>,
    rels: Vec<Rel>,
}

impl DepRel {
    /// The non-dependent family.
    pub fn constant(param1: Arc<Carrier>, param2: Arc<Carrier>, rel: Rel) -> Self {
        DepRel {
            slots: Slots::new(param1, param2),
            base_left: rel.left().clone(),
            base_right: rel.right().clone(),
            rels: vec![rel],
        }
    }

    /// Listed cases override `default`; a repeated pair keeps the last case.
    pub fn new(
        param1: Arc<Carrier>,
        param2: Arc<Carrier>,
        cases: impl IntoIterator<Item = (Value, Value, Rel)>,
        default: Rel,
    ) -> Result<Self> {
        let mut d = DepRel::constant(param1, param2, default);
        for (x, y, rel) in cases {
            d.set(&x, &y, rel)?;
        }
        Ok(d)
    }

    /// Evaluates `case` on every parameter pair.
    pub fn from_fn(
        param1: Arc<Carrier>,
        param2: Arc<Carrier>,
        base_left: Arc<Carrier>,
        base_right: Arc<Carrier>,
        mut case: impl FnMut(&Value, &Value) -> Result<Rel>,
    ) -> Result<Self> {
        let mut d = DepRel::constant(
            param1.clone(),
            param2.clone(),
            Rel::empty(base_left, base_right),
        );
        for x in param1.elements() {
            for y in param2.elements() {
                d.set(x, y, case(x, y)?)?;
            }
        }
        Ok(d)
    }

    pub fn set(&mut self, x: &Value, y: &Value, rel: Rel) -> Result<()> {
        rel.left().expect_same(&self.base_left, "dependent relation case")?;
        rel.right().expect_same(&self.base_right, "dependent relation case")?;
        let (i, j) = self.slots.locate(x, y)?;
        let k = intern(&mut self.rels, rel);
        let n2 = self.slots.param2.len();
        self.slots.slot[i * n2 + j] = k;
        Ok(())
    }

    pub fn param1(&self) -> &Arc<Carrier> {
        &self.slots.param1
    }

    pub fn param2(&self) -> &Arc<Carrier> {
        &self.slots.param2
    }

    pub fn base_left(&self) -> &Arc<Carrier> {
        &self.base_left
    }

    pub fn base_right(&self) -> &Arc<Carrier> {
        &self.base_right
    }

    pub fn default_rel(&self) -> &Rel {
        &self.rels[0]
    }

    pub fn at_idx(&self, i: usize, j: usize) -> &Rel {
        &self.rels[self.slots.at(i, j)]
    }

    /// Identifier of the case at `(i, j)`. Equal ids imply equal relations.
    pub fn case_id(&self, i: usize, j: usize) -> usize {
        self.slots.at(i, j)
    }

    pub fn at(&self, x: &Value, y: &Value) -> Result<&Rel> {
        let (i, j) = self.slots.locate(x, y)?;
        Ok(self.at_idx(i, j))
    }

    /// Distinct relations in the family (the default first).
    pub fn distinct_cases(&self) -> &[Rel] {
        &self.rels
    }

    /// Parameter pairs whose case differs from the default, in canonical order.
    pub fn cases(&self) -> impl Iterator<Item = (&Value, &Value, &Rel)> + '_ {
        self.slots.overridden().map(|(i, j, s)| {
            (
                &self.slots.param1.elements()[i],
                &self.slots.param2.elements()[j],
                &self.rels[s],
            )
        })
    }

    pub fn is_constant(&self) -> bool {
        self.rels.len() == 1 || self.slots.slot.iter().all(|&s| s == self.slots.slot[0])
    }
}

/// A function family indexed by a parameter pair, such as `l₂ x' x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DepFunTable {
    slots: Slots,
    dom: Arc<Carrier>,
    cod: Arc<Carrier>,
    tables: Vec<FunTable>,
}

impl DepFunTable {
    pub fn constant(param1: Arc<Carrier>, param2: Arc<Carrier>, table: FunTable) -> Self {
        DepFunTable {
            slots: Slots::new(param1, param2),
            dom: table.dom().clone(),
            cod: table.cod().clone(),
            tables: vec![table],
        }
    }

    pub fn new(
        param1: Arc<Carrier>,
        param2: Arc<Carrier>,
        cases: impl IntoIterator<Item = (Value, Value, FunTable)>,
        default: FunTable,
    ) -> Result<Self> {
        let mut d = DepFunTable::constant(param1, param2, default);
        for (x, y, t) in cases {
            d.set(&x, &y, t)?;
        }
        Ok(d)
    }

    pub fn from_fn(
        param1: Arc<Carrier>,
        param2: Arc<Carrier>,
        mut case: impl FnMut(&Value, &Value) -> Result<FunTable>,
    ) -> Result<Self> {
        let (Some(x0), Some(y0)) = (param1.elements().first(), param2.elements().first()) else {
            return Err(Error::Wiring(
                "cannot infer a default table over an empty parameter carrier".into(),
            ));
        };
        let mut d = DepFunTable::constant(param1.clone(), param2.clone(), case(x0, y0)?);
        for x in param1.elements() {
            for y in param2.elements() {
                d.set(x, y, case(x, y)?)?;
            }
        }
        Ok(d)
    }

    pub fn set(&mut self, x: &Value, y: &Value, t: FunTable) -> Result<()> {
        t.dom().expect_same(&self.dom, "dependent function case")?;
        t.cod().expect_same(&self.cod, "dependent function case")?;
        let (i, j) = self.slots.locate(x, y)?;
        let k = intern(&mut self.tables, t);
        let n2 = self.slots.param2.len();
        self.slots.slot[i * n2 + j] = k;
        Ok(())
    }

    pub fn param1(&self) -> &Arc<Carrier> {
        &self.slots.param1
    }

    pub fn param2(&self) -> &Arc<Carrier> {
        &self.slots.param2
    }

    pub fn dom(&self) -> &Arc<Carrier> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Carrier> {
        &self.cod
    }

    pub fn default_table(&self) -> &FunTable {
        &self.tables[0]
    }

    pub fn at_idx(&self, i: usize, j: usize) -> &FunTable {
        &self.tables[self.slots.at(i, j)]
    }

    pub fn at(&self, x: &Value, y: &Value) -> Result<&FunTable> {
        let (i, j) = self.slots.locate(x, y)?;
        Ok(self.at_idx(i, j))
    }

    pub fn cases(&self) -> impl Iterator<Item = (&Value, &Value, &FunTable)> + '_ {
        self.slots.overridden().map(|(i, j, s)| {
            (
                &self.slots.param1.elements()[i],
                &self.slots.param2.elements()[j],
                &self.tables[s],
            )
        })
    }

    pub fn is_constant(&self) -> bool {
        self.tables.len() == 1 || self.slots.slot.iter().all(|&s| s == self.slots.slot[0])
    }
}

/// The dependent function mapper: `x ↦ g(x, f x)(h(f x))`.
///
/// With `g` constant this is `h` followed by the constant table, after `f`.
pub fn dep_fun_map(f: &FunTable, g: &DepFunTable, h: &FunTable) -> Result<FunTable> {
    f.cod().expect_same(h.dom(), "dep_fun_map")?;
    g.param1().expect_same(f.dom(), "dep_fun_map")?;
    g.param2().expect_same(f.cod(), "dep_fun_map")?;
    h.cod().expect_same(g.dom(), "dep_fun_map")?;
    let idx = (0..f.dom().len())
        .map(|i| {
            let fx = f.apply_idx(i);
            g.at_idx(i, fx).apply_idx(h.apply_idx(fx))
        })
        .collect();
    FunTable::from_indices(f.dom().clone(), g.cod().clone(), idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(name: &str, lo: i64, hi: i64) -> Arc<Carrier> {
        Arc::new(Carrier::ints(name, lo, hi))
    }

    #[test]
    fn default_and_overrides() {
        let p = c("P", 0, 1);
        let b = c("B", 0, 2);
        let mut d = DepRel::constant(p.clone(), p.clone(), Rel::empty(b.clone(), b.clone()));
        assert!(d.is_constant());
        d.set(&Value::Int(1), &Value::Int(0), Rel::equality(b.clone())).unwrap();
        assert!(!d.is_constant());
        assert_eq!(d.at(&Value::Int(1), &Value::Int(0)).unwrap().len(), 3);
        assert!(d.at(&Value::Int(0), &Value::Int(0)).unwrap().is_empty());
        assert_eq!(d.cases().count(), 1);
        assert!(d.set(&Value::Int(0), &Value::Int(0), Rel::equality(p.clone())).is_err());
    }

    #[test]
    fn mapper_non_dependent_is_plain_composition() {
        let a = c("A", 0, 2);
        let id = FunTable::identity(a.clone());
        let h = FunTable::from_fn(a.clone(), a.clone(), |v| Value::Int(2 - v.as_int().unwrap())).unwrap();
        let g = DepFunTable::constant(a.clone(), a.clone(), id.clone());
        assert_eq!(dep_fun_map(&id, &g, &h).unwrap(), h);
    }

    #[test]
    fn mapper_with_conversions() {
        // n ↦ to_nat(2 − to_int n), with g the to_nat case for every parameter pair.
        let int5 = c("Int5", -2, 2);
        let nat3 = c("Nat3", 0, 2);
        let to_int = FunTable::from_fn(nat3.clone(), int5.clone(), Clone::clone).unwrap();
        let to_nat =
            FunTable::from_fn(int5.clone(), nat3.clone(), |v| Value::Int(v.as_int().unwrap().max(0)))
                .unwrap();
        let minus2 = FunTable::from_fn(int5.clone(), int5.clone(), |v| {
            Value::Int((2 - v.as_int().unwrap()).clamp(-2, 2))
        })
        .unwrap();
        let g = DepFunTable::constant(nat3.clone(), int5.clone(), to_nat);
        let t = dep_fun_map(&to_int, &g, &minus2).unwrap();
        assert_eq!(t.outputs(), &[Value::Int(2), Value::Int(1), Value::Int(0)]);
    }

    #[test]
    fn mapper_on_empty_domain() {
        let e = Arc::new(Carrier::new("E", []));
        let b = c("B", 0, 1);
        let f = FunTable::from_fn(e.clone(), b.clone(), |_| unreachable!()).unwrap();
        let h = FunTable::identity(b.clone());
        let g = DepFunTable::new(e.clone(), b.clone(), [], FunTable::identity(b.clone())).unwrap();
        assert!(dep_fun_map(&f, &g, &h).unwrap().outputs().is_empty());
    }
}
