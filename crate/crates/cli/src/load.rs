//! Resolves a parsed document into carriers, relations, functions and a
//! transport registry. Declarations may appear in any order.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use pgal_functor::{builtin_functor, FunctorDef};
use pgal_galois::{galois_class_check, EquivalenceRecord, GaloisClass, PartialQuotient};
use pgal_relation::{restricted_eq, CheckReport, DepFunTable, DepRel, Pred, Rel};
use pgal_transport::Registry;
use pgal_value::{fun_space, parse_value_with, Carrier, FunTable, Value};

use crate::doc::{CarrierDecl, Document, RelationDecl};
use crate::error::{CliError, Result};

/// Engine limits taken from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub cap: usize,
    pub list_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { cap: pgal_value::DEFAULT_CAP, list_bound: pgal_value::DEFAULT_LIST_BOUND }
    }
}

/// Everything a document declares, resolved.
#[derive(Debug)]
pub struct Loaded {
    pub limits: Limits,
    pub carriers: BTreeMap<String, Arc<Carrier>>,
    pub relations: BTreeMap<String, Rel>,
    pub functions: BTreeMap<String, FunTable>,
    pub dep_relations: BTreeMap<String, DepRel>,
    pub dep_functions: BTreeMap<String, DepFunTable>,
    pub functors: BTreeMap<String, FunctorDef>,
    pub equivalences: BTreeMap<String, EquivalenceRecord>,
    /// Declared equivalences the registry refused, with the failed check.
    pub rejected: BTreeMap<String, CheckReport>,
    pub quotients: BTreeMap<String, PartialQuotient>,
    /// PER equivalences, every relation as a guard condition, all
    /// functions and functors.
    pub registry: Registry,
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &'static str, name: &str) -> Result<&'a T> {
    map.get(name).ok_or_else(|| CliError::Unresolved { kind, name: name.to_string() })
}

impl Loaded {
    pub fn carrier(&self, name: &str) -> Result<&Arc<Carrier>> {
        lookup(&self.carriers, "carrier", name)
    }

    pub fn relation(&self, name: &str) -> Result<&Rel> {
        lookup(&self.relations, "relation", name)
    }

    pub fn function(&self, name: &str) -> Result<&FunTable> {
        lookup(&self.functions, "function", name)
    }

    pub fn dep_relation(&self, name: &str) -> Result<&DepRel> {
        lookup(&self.dep_relations, "dependent relation", name)
    }

    pub fn dep_function(&self, name: &str) -> Result<&DepFunTable> {
        lookup(&self.dep_functions, "dependent function", name)
    }

    pub fn functor(&self, name: &str) -> Result<&FunctorDef> {
        lookup(&self.functors, "functor", name)
    }

    pub fn equivalence(&self, name: &str) -> Result<&EquivalenceRecord> {
        lookup(&self.equivalences, "equivalence", name)
    }

    pub fn quotient(&self, name: &str) -> Result<&PartialQuotient> {
        lookup(&self.quotients, "quotient", name)
    }
}

fn value(text: &str, list_bound: usize, section: &'static str, name: &str) -> Result<Value> {
    parse_value_with(text, list_bound).map_err(|e| CliError::decl(section, name, format!("{text:?}: {e}")))
}

struct CarrierResolver<'a> {
    decls: &'a BTreeMap<String, CarrierDecl>,
    limits: Limits,
    done: BTreeMap<String, Arc<Carrier>>,
    visiting: BTreeSet<String>,
}

impl CarrierResolver<'_> {
    fn get(&mut self, name: &str) -> Result<Arc<Carrier>> {
        if let Some(c) = self.done.get(name) {
            return Ok(c.clone());
        }
        let decl = lookup(self.decls, "carrier", name)?;
        if !self.visiting.insert(name.to_string()) {
            return Err(CliError::Cycle(name.to_string()));
        }
        let c = match decl {
            CarrierDecl::Elements(items) => {
                let mut vals = Vec::with_capacity(items.len());
                let mut seen = BTreeSet::new();
                for t in items {
                    let v = value(t, self.limits.list_bound, "carrier", name)?;
                    if !seen.insert(v.clone()) {
                        return Err(CliError::decl("carrier", name, format!("duplicate element {v}")));
                    }
                    vals.push(v);
                }
                Arc::new(Carrier::new(name, vals))
            }
            // Function spaces keep their structural name so that they agree
            // with the spaces synthesis builds.
            CarrierDecl::Fun(f) => {
                let dom = self.get(&f.fun[0])?;
                let cod = self.get(&f.fun[1])?;
                fun_space(&dom, &cod, self.limits.cap).map_err(|e| CliError::decl("carrier", name, e))?
            }
        };
        self.visiting.remove(name);
        self.done.insert(name.to_string(), c.clone());
        Ok(c)
    }
}

/// Resolves every declaration. Equivalences that are not PER equivalences
/// stay available to `check` and `verify` but are not registered.
pub fn load(doc: &Document, limits: Limits) -> Result<Loaded> {
    let mut res = CarrierResolver { decls: &doc.carriers, limits, done: BTreeMap::new(), visiting: BTreeSet::new() };
    for name in doc.carriers.keys() {
        res.get(name)?;
    }
    let carriers = res.done;
    let car = |n: &str| lookup(&carriers, "carrier", n).cloned();
    let lb = limits.list_bound;

    let mut relations = BTreeMap::new();
    for (name, d) in &doc.relations {
        let s = "relation";
        let rel = match d {
            RelationDecl::Pairs(p) => {
                let (a, b) = (car(&p.between[0])?, car(&p.between[1])?);
                let mut pairs = Vec::with_capacity(p.pairs.len());
                for [x, y] in &p.pairs {
                    pairs.push((value(x, lb, s, name)?, value(y, lb, s, name)?));
                }
                Rel::new(a, b, pairs).map_err(|e| CliError::decl(s, name, e))?
            }
            RelationDecl::Restricted(r) => {
                let c = car(&r.restricted_eq)?;
                let members = r.members.iter().map(|m| value(m, lb, s, name)).collect::<Result<Vec<_>>>()?;
                restricted_eq(&Pred::new(c, members).map_err(|e| CliError::decl(s, name, e))?)
            }
            RelationDecl::Eq(e) => Rel::equality(car(&e.eq)?),
        };
        relations.insert(name.clone(), rel);
    }
    let rel = |n: &str| lookup(&relations, "relation", n).cloned();

    let mut functions = BTreeMap::new();
    for (name, d) in &doc.functions {
        let s = "function";
        let mut pairs = Vec::with_capacity(d.table.len());
        for [x, y] in &d.table {
            pairs.push((value(x, lb, s, name)?, value(y, lb, s, name)?));
        }
        let t = FunTable::from_pairs(car(&d.dom)?, car(&d.cod)?, pairs).map_err(|e| CliError::decl(s, name, e))?;
        functions.insert(name.clone(), t);
    }
    let fun = |n: &str| lookup(&functions, "function", n).cloned();

    let mut dep_relations = BTreeMap::new();
    for (name, d) in &doc.dep_relations {
        let s = "dependent relation";
        let default = rel(&d.default)?;
        let (bl, br) = (car(&d.base[0])?, car(&d.base[1])?);
        default.left().expect_same(&bl, "default case").map_err(|e| CliError::decl(s, name, e))?;
        default.right().expect_same(&br, "default case").map_err(|e| CliError::decl(s, name, e))?;
        let mut cases = Vec::with_capacity(d.cases.len());
        for c in &d.cases {
            cases.push((value(&c.at[0], lb, s, name)?, value(&c.at[1], lb, s, name)?, rel(&c.rel)?));
        }
        let dr = DepRel::new(car(&d.params[0])?, car(&d.params[1])?, cases, default)
            .map_err(|e| CliError::decl(s, name, e))?;
        dep_relations.insert(name.clone(), dr);
    }

    let mut dep_functions = BTreeMap::new();
    for (name, d) in &doc.dep_functions {
        let s = "dependent function";
        let default = fun(&d.default)?;
        default.dom().expect_same(car(&d.dom)?.as_ref(), "default case").map_err(|e| CliError::decl(s, name, e))?;
        default.cod().expect_same(car(&d.cod)?.as_ref(), "default case").map_err(|e| CliError::decl(s, name, e))?;
        let mut cases = Vec::with_capacity(d.cases.len());
        for c in &d.cases {
            cases.push((value(&c.at[0], lb, s, name)?, value(&c.at[1], lb, s, name)?, fun(&c.fun)?));
        }
        let df = DepFunTable::new(car(&d.params[0])?, car(&d.params[1])?, cases, default)
            .map_err(|e| CliError::decl(s, name, e))?;
        dep_functions.insert(name.clone(), df);
    }

    let mut functors = BTreeMap::new();
    for (name, text) in &doc.functors {
        let resolve = |n: &str| carriers.get(n).cloned();
        let f = builtin_functor(text, lb, &resolve).map_err(|e| CliError::decl("functor", name, e))?;
        functors.insert(name.clone(), f);
    }

    let mut equivalences = BTreeMap::new();
    for (name, d) in &doc.equivalences {
        let e = EquivalenceRecord::new(rel(&d.left)?, rel(&d.right)?, fun(&d.l)?, fun(&d.r)?)
            .map_err(|e| CliError::decl("equivalence", name, e))?;
        equivalences.insert(name.clone(), e);
    }

    let mut quotients = BTreeMap::new();
    for (name, d) in &doc.quotients {
        let q = PartialQuotient::new(rel(&d.t)?, fun(&d.abs)?, fun(&d.rep)?)
            .map_err(|e| CliError::decl("quotient", name, e))?;
        quotients.insert(name.clone(), q);
    }

    let mut registry = Registry::new(limits.cap, limits.list_bound);
    for (n, c) in &carriers {
        registry = registry.with_carrier(n, c.clone())?;
    }
    for (n, r) in &relations {
        registry = registry.with_relation(n, r.clone())?.with_condition(n, r.clone())?;
    }
    for (n, f) in &functions {
        registry = registry.with_function(n, f.clone())?;
    }
    for (n, f) in &functors {
        registry = registry.with_functor(n, f.clone())?;
    }
    let mut rejected = BTreeMap::new();
    for (n, e) in &equivalences {
        let report = galois_class_check(GaloisClass::PerEquiv, e);
        if report.verdict() {
            registry = registry.register_equivalence(n, e.clone())?;
        } else {
            rejected.insert(n.clone(), report);
        }
    }

    Ok(Loaded {
        limits,
        carriers,
        relations,
        functions,
        dep_relations,
        dep_functions,
        functors,
        equivalences,
        rejected,
        quotients,
        registry,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doc::parse_document;

    fn load_text(s: &str) -> Result<Loaded> {
        load(&parse_document(s)?, Limits::default())
    }

    #[test]
    fn order_of_declarations_is_irrelevant() {
        let a = load_text(
            r#"{"carriers":{"F":{"fun":["B","B"]},"B":["0","1"]},
                "relations":{"E":{"eq":"B"}},
                "functions":{"not":{"dom":"B","cod":"B","table":[["0","1"],["1","0"]]}},
                "equivalences":{"id":{"L":"E","R":"E","l":"not","r":"not"}}}"#,
        )
        .unwrap();
        assert_eq!(a.carriers["F"].len(), 4);
        assert!(a.registry.equivalence("id").is_ok());
    }

    #[test]
    fn unresolved_and_cyclic_references() {
        assert!(matches!(
            load_text(r#"{"relations":{"E":{"eq":"Nope"}}}"#),
            Err(CliError::Unresolved { kind: "carrier", .. })
        ));
        assert!(matches!(load_text(r#"{"carriers":{"A":{"fun":["A","A"]}}}"#), Err(CliError::Cycle(_))));
        assert!(load_text(r#"{"carriers":{"A":["0","0"]}}"#).is_err());
        assert!(load_text(r#"{"carriers":{"A":["0("]}}"#).is_err());
    }

    #[test]
    fn non_per_equivalences_are_kept_but_not_registered() {
        let l = load_text(
            r#"{"carriers":{"B":["0","1"]},
                "relations":{"le":{"between":["B","B"],"pairs":[["0","0"],["0","1"],["1","1"]]}},
                "functions":{"id":{"dom":"B","cod":"B","table":[["0","0"],["1","1"]]}},
                "equivalences":{"ord":{"L":"le","R":"le","l":"id","r":"id"}}}"#,
        )
        .unwrap();
        assert!(l.equivalence("ord").is_ok());
        assert!(l.rejected.contains_key("ord"));
        assert!(l.registry.equivalence("ord").is_err());
    }
}
