use std::collections::BTreeMap;
use std::sync::Arc;

use pgal_functor::{builtin_functor, FunctorDef};
use pgal_galois::{galois_class_check, EquivalenceRecord, GaloisClass};
use pgal_relation::Rel;
use pgal_value::{Carrier, FunTable, DEFAULT_CAP, DEFAULT_LIST_BOUND};

use crate::error::{Result, TransportError};

/// Named declarations available to synthesis. Registration returns a new
/// registry and leaves the receiver untouched.
#[derive(Clone, Debug)]
pub struct Registry {
    carriers: BTreeMap<String, Arc<Carrier>>,
    relations: BTreeMap<String, Rel>,
    functions: BTreeMap<String, FunTable>,
    conditions: BTreeMap<String, Rel>,
    functors: BTreeMap<String, FunctorDef>,
    equivalences: BTreeMap<String, EquivalenceRecord>,
    cap: usize,
    list_bound: usize,
}

impl Default for Registry {
    fn default() -> Self {
        Registry::new(DEFAULT_CAP, DEFAULT_LIST_BOUND)
    }
}

fn insert<T: Clone>(
    map: &BTreeMap<String, T>,
    kind: &'static str,
    name: &str,
    v: T,
) -> Result<BTreeMap<String, T>> {
    if map.contains_key(name) {
        return Err(TransportError::Duplicate { kind, name: name.to_string() });
    }
    let mut out = map.clone();
    out.insert(name.to_string(), v);
    Ok(out)
}

impl Registry {
    pub fn new(cap: usize, list_bound: usize) -> Self {
        Registry {
            carriers: BTreeMap::new(),
            relations: BTreeMap::new(),
            functions: BTreeMap::new(),
            conditions: BTreeMap::new(),
            functors: BTreeMap::new(),
            equivalences: BTreeMap::new(),
            cap,
            list_bound,
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn list_bound(&self) -> usize {
        self.list_bound
    }

    pub fn with_carrier(&self, name: &str, c: Arc<Carrier>) -> Result<Self> {
        Ok(Registry { carriers: insert(&self.carriers, "carrier", name, c)?, ..self.clone() })
    }

    pub fn with_relation(&self, name: &str, r: Rel) -> Result<Self> {
        Ok(Registry { relations: insert(&self.relations, "relation", name, r)?, ..self.clone() })
    }

    /// Registers a term or map. Terms are transported by name.
    pub fn with_function(&self, name: &str, f: FunTable) -> Result<Self> {
        Ok(Registry { functions: insert(&self.functions, "function", name, f)?, ..self.clone() })
    }

    /// Registers a binary condition usable in guards.
    pub fn with_condition(&self, name: &str, r: Rel) -> Result<Self> {
        Ok(Registry { conditions: insert(&self.conditions, "condition", name, r)?, ..self.clone() })
    }

    pub fn with_functor(&self, name: &str, f: FunctorDef) -> Result<Self> {
        Ok(Registry { functors: insert(&self.functors, "functor", name, f)?, ..self.clone() })
    }

    /// Registers `e` under `name` if it is a partial Galois equivalence of
    /// PERs. The rejection carries the failing class report.
    pub fn register_equivalence(&self, name: &str, e: EquivalenceRecord) -> Result<Self> {
        if self.equivalences.contains_key(name) {
            return Err(TransportError::Duplicate { kind: "equivalence", name: name.to_string() });
        }
        let report = galois_class_check(GaloisClass::PerEquiv, &e);
        if !report.verdict() {
            return Err(TransportError::Rejected { name: name.to_string(), report: Box::new(report) });
        }
        Ok(Registry {
            equivalences: insert(&self.equivalences, "equivalence", name, e)?,
            ..self.clone()
        })
    }

    pub fn carrier(&self, name: &str) -> Result<&Arc<Carrier>> {
        self.carriers.get(name).ok_or_else(|| unresolved("carrier", name))
    }

    pub fn relation(&self, name: &str) -> Result<&Rel> {
        self.relations.get(name).ok_or_else(|| unresolved("relation", name))
    }

    pub fn function(&self, name: &str) -> Result<&FunTable> {
        self.functions.get(name).ok_or_else(|| unresolved("function", name))
    }

    pub fn condition(&self, name: &str) -> Result<&Rel> {
        self.conditions.get(name).ok_or_else(|| unresolved("condition", name))
    }

    pub fn equivalence(&self, name: &str) -> Result<&EquivalenceRecord> {
        self.equivalences.get(name).ok_or_else(|| unresolved("equivalence", name))
    }

    /// A declared functor, or a built-in one written without parentheses
    /// (`identity`, `option`, `list2`, `product3`, `sum2`).
    pub fn functor(&self, name: &str) -> Result<FunctorDef> {
        if let Some(f) = self.functors.get(name) {
            return Ok(f.clone());
        }
        let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
        let (head, num) = name.split_at(split);
        let text = if num.is_empty() { head.to_string() } else { format!("{head}({num})") };
        if !matches!(head, "identity" | "option" | "list" | "product" | "sum") {
            return Err(unresolved("functor", name));
        }
        let resolve = |n: &str| self.carriers.get(n).cloned();
        Ok(builtin_functor(&text, self.list_bound, &resolve)?)
    }

    pub fn equivalences(&self) -> impl Iterator<Item = (&String, &EquivalenceRecord)> {
        self.equivalences.iter()
    }

    pub fn carriers(&self) -> impl Iterator<Item = (&String, &Arc<Carrier>)> {
        self.carriers.iter()
    }
}

fn unresolved(kind: &'static str, name: &str) -> TransportError {
    TransportError::Unresolved { kind, name: name.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pgal_value::Value;

    fn b2() -> Arc<Carrier> {
        Arc::new(Carrier::ints("B2", 0, 1))
    }

    #[test]
    fn registration_is_persistent() {
        let r0 = Registry::default();
        let r1 = r0.with_carrier("B2", b2()).unwrap();
        assert!(r0.carrier("B2").is_err());
        assert!(r1.carrier("B2").is_ok());
        assert!(matches!(
            r1.with_carrier("B2", b2()),
            Err(TransportError::Duplicate { kind: "carrier", .. })
        ));
    }

    #[test]
    fn builtin_functor_names() {
        let r = Registry::default();
        assert_eq!(r.functor("option").unwrap().to_string(), "option");
        assert_eq!(r.functor("list2").unwrap().to_string(), "list(2)");
        assert!(r.functor("list9").is_err());
        assert!(r.functor("tree").is_err());
    }

    #[test]
    fn non_per_registration_is_rejected() {
        let c = b2();
        let le = Rel::from_fn(c.clone(), c.clone(), |a: &Value, b: &Value| a <= b);
        let id = FunTable::identity(c);
        let e = EquivalenceRecord::new(le.clone(), le, id.clone(), id).unwrap();
        let err = Registry::default().register_equivalence("le", e).unwrap_err();
        assert!(err.report().is_some());
    }
}
