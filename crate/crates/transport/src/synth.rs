//! Synthesised equivalences, evaluated pointwise.
//!
//! Function spaces of nested dependent relators outgrow any cap long before
//! their elements do, so a node answers `L x y`, `R x y`, `l x` and `r y` for
//! single values and only materialises a full record on request.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use pgal_compose::{build_composition, commutation_check, CompositionInput};
use pgal_functor::{build_functor_closure, FunctorDef, RelFn, ValFn};
use pgal_funrel::{build_dep_fun_closure, DepFunClosureInput};
use pgal_galois::EquivalenceRecord;
use pgal_relation::{CheckReport, DepFunTable, DepRel, Rel};
use pgal_value::{fun_space, Carrier, Error, FunTable, Result, Value};

use crate::expr::{Side, WILDCARD};

/// Binder values in scope, innermost last.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Env(Vec<(String, Value)>);

impl Env {
    pub fn bind(&self, name: &str, v: &Value) -> Env {
        let mut out = self.clone();
        if name != WILDCARD {
            out.0.push((name.to_string(), v.clone()));
        }
        out
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.0.iter().rev().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    fn restrict(&self, names: &BTreeSet<String>) -> Vec<Option<&Value>> {
        names.iter().map(|n| self.get(n)).collect()
    }
}

/// Environments for the two expressions, which bind independently.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Envs {
    pub left: Env,
    pub right: Env,
}

impl Envs {
    fn side(&self, s: Side) -> &Env {
        match s {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }
}

/// The values one side of a node ranges over. `Fun` marks a function space
/// too large to enumerate whose elements are still decodable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Space {
    Finite(Arc<Carrier>),
    Fun { dom: Arc<Carrier>, cod: Arc<Carrier>, cap: usize },
}

impl Space {
    pub fn name(&self) -> String {
        match self {
            Space::Finite(c) => c.name().to_string(),
            Space::Fun { dom, cod, .. } => format!("({}->{})", dom.name(), cod.name()),
        }
    }

    pub fn finite(&self) -> Result<&Arc<Carrier>> {
        match self {
            Space::Finite(c) => Ok(c),
            Space::Fun { dom, cod, cap } => Err(Error::CapExceeded {
                what: format!("function space {}", self.name()),
                count: format!("{}^{}", cod.len(), dom.len()),
                cap: *cap,
            }),
        }
    }

    pub fn contains(&self, v: &Value) -> bool {
        match self {
            Space::Finite(c) => c.contains(v),
            Space::Fun { dom, cod, .. } => FunTable::from_value(dom.clone(), cod.clone(), v).is_ok(),
        }
    }

    fn fun(dom: &Arc<Carrier>, cod: &Arc<Carrier>, cap: usize) -> Space {
        match fun_space(dom, cod, cap) {
            Ok(c) => Space::Finite(c),
            Err(_) => Space::Fun { dom: dom.clone(), cod: cod.clone(), cap },
        }
    }
}

fn idx(s: Side) -> usize {
    match s {
        Side::Left => 0,
        Side::Right => 1,
    }
}

fn other(s: Side) -> Side {
    match s {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    }
}

/// A guard resolved to its condition relation.
#[derive(Clone, Debug)]
pub(crate) struct BoundGuard {
    pub rel: Rel,
    pub args: (String, String),
}

impl BoundGuard {
    fn holds(&self, env: &Env) -> bool {
        match (env.get(&self.args.0), env.get(&self.args.1)) {
            (Some(a), Some(b)) => self.rel.holds(a, b),
            _ => false,
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct DepFunNode {
    /// Binder pairs of the left and right expressions.
    pub binders: [(String, String); 2],
    pub guards: [Option<BoundGuard>; 2],
    pub dom: Node,
    pub cod: Node,
    pub spaces: [Space; 2],
}

#[derive(Clone, Debug)]
pub(crate) enum Node {
    Leaf { name: String, e: EquivalenceRecord },
    DepFun(Box<DepFunNode>),
    Functor { f: FunctorDef, args: Vec<Node>, carriers: [Arc<Carrier>; 2] },
    Compose { a: Box<Node>, b: Box<Node> },
}

fn pair_cap(c: &Carrier, cap: usize) -> Result<()> {
    let n = c.len() as u128 * c.len() as u128;
    if n > cap as u128 {
        return Err(Error::CapExceeded {
            what: format!("relation pairs on {}", c.name()),
            count: n.to_string(),
            cap,
        });
    }
    Ok(())
}

impl DepFunNode {
    fn bind(&self, s: Side, envs: &Envs, x1: &Value, x2: &Value) -> Envs {
        let (b1, b2) = &self.binders[idx(s)];
        let mut out = envs.clone();
        let env = match s {
            Side::Left => &mut out.left,
            Side::Right => &mut out.right,
        };
        *env = env.bind(b1, x1).bind(b2, x2);
        out
    }

    /// Environments of the case record at `x ⪅ x'`: `L₂ x (r₁ x')` against
    /// `R₂ (l₁ x) x'`.
    pub(crate) fn pair_envs(&self, envs: &Envs, x: &Value, xp: &Value) -> Result<Envs> {
        let rx = self.dom.map(Side::Right, xp)?;
        let lx = self.dom.map(Side::Left, x)?;
        let e = self.bind(Side::Left, envs, x, &rx);
        Ok(self.bind(Side::Right, &e, &lx, xp))
    }

    pub(crate) fn guard(&self, s: Side, envs: &Envs) -> bool {
        self.guards[idx(s)].as_ref().map_or(true, |g| g.holds(envs.side(s)))
    }

    fn decode(&self, s: Side, v: &Value) -> Option<FunTable> {
        let dom = self.dom.carrier(s).ok()?;
        let cod = self.cod.carrier(s).ok()?;
        FunTable::from_value(dom.clone(), cod.clone(), v).ok()
    }

    /// The case relation `S x₁ x₂` on side `s` at the given arguments.
    fn case_holds(&self, s: Side, envs: &Envs, x1: &Value, x2: &Value, y1: &Value, y2: &Value) -> Result<bool> {
        let inner = self.bind(s, envs, x1, x2);
        if !self.guard(s, &inner) {
            return Ok(true);
        }
        self.cod.holds(s, &inner, y1, y2)
    }

    /// First `(x₁, x₂)` with `D x₁ x₂` and not `S x₁ x₂ (f x₁) (g x₂)`,
    /// extended by the nested path of the failing case.
    fn plain_violation(&self, s: Side, envs: &Envs, f: &FunTable, g: &FunTable) -> Result<Option<Vec<Value>>> {
        let dom = self.dom.carrier(s)?;
        for x1 in dom.elements() {
            for x2 in dom.elements() {
                if !self.dom.holds(s, envs, x1, x2)? {
                    continue;
                }
                let (y1, y2) = (f.at(x1), g.at(x2));
                if self.case_holds(s, envs, x1, x2, y1, y2)? {
                    continue;
                }
                let inner = self.bind(s, envs, x1, x2);
                let mut path = vec![x1.clone()];
                path.extend(self.cod.violation(s, &inner, y1, y2)?.unwrap_or_default());
                return Ok(Some(path));
            }
        }
        Ok(None)
    }
}

impl Node {
    pub fn space(&self, s: Side) -> Space {
        match self {
            Node::Leaf { e, .. } => Space::Finite(match s {
                Side::Left => e.alpha().clone(),
                Side::Right => e.beta().clone(),
            }),
            Node::DepFun(d) => d.spaces[idx(s)].clone(),
            Node::Functor { carriers, .. } => Space::Finite(carriers[idx(s)].clone()),
            Node::Compose { a, b } => match s {
                Side::Left => a.space(s),
                Side::Right => b.space(s),
            },
        }
    }

    pub fn carrier(&self, s: Side) -> Result<Arc<Carrier>> {
        self.space(s).finite().cloned()
    }

    /// `L x y` (left) or `R x y` (right) under `envs`. Values outside the
    /// side's space are unrelated.
    pub fn holds(&self, s: Side, envs: &Envs, x: &Value, y: &Value) -> Result<bool> {
        match self {
            Node::Leaf { e, .. } => Ok(match s {
                Side::Left => e.left().holds(x, y),
                Side::Right => e.right().holds(x, y),
            }),
            Node::DepFun(d) => {
                let (Some(f), Some(g)) = (d.decode(s, x), d.decode(s, y)) else {
                    return Ok(false);
                };
                Ok(d.plain_violation(s, envs, &f, &g)?.is_none()
                    && d.plain_violation(s, envs, &f, &f)?.is_none()
                    && d.plain_violation(s, envs, &g, &g)?.is_none())
            }
            Node::Functor { f, args, .. } => {
                let err: RefCell<Option<Error>> = RefCell::new(None);
                let fns: Vec<Box<RelFn<'_>>> = args
                    .iter()
                    .map(|n| {
                        let err = &err;
                        Box::new(move |a: &Value, b: &Value| match n.holds(s, envs, a, b) {
                            Ok(v) => v,
                            Err(e) => {
                                err.borrow_mut().get_or_insert(e);
                                false
                            }
                        }) as Box<RelFn<'_>>
                    })
                    .collect();
                let refs: Vec<&RelFn<'_>> = fns.iter().map(|b| b.as_ref()).collect();
                let v = f.rel_with(&refs, x, y);
                drop(refs);
                drop(fns);
                match err.into_inner() {
                    Some(e) => Err(e),
                    None => Ok(v),
                }
            }
            Node::Compose { .. } => {
                let rec = self.record(envs, usize::MAX)?;
                Ok(match s {
                    Side::Left => rec.left().holds(x, y),
                    Side::Right => rec.right().holds(x, y),
                })
            }
        }
    }

    /// `None` if `x` and `y` are related; otherwise the nested path of
    /// left arguments of the first failing dependent-function clause.
    pub fn violation(&self, s: Side, envs: &Envs, x: &Value, y: &Value) -> Result<Option<Vec<Value>>> {
        if let Node::DepFun(d) = self {
            let (Some(f), Some(g)) = (d.decode(s, x), d.decode(s, y)) else {
                return Ok(Some(Vec::new()));
            };
            for (a, b) in [(&f, &f), (&g, &g), (&f, &g)] {
                if let Some(w) = d.plain_violation(s, envs, a, b)? {
                    return Ok(Some(w));
                }
            }
            return Ok(None);
        }
        Ok(if self.holds(s, envs, x, y)? { None } else { Some(Vec::new()) })
    }

    /// `l x` (left) or `r y` (right). The maps never depend on binders.
    pub fn map(&self, s: Side, x: &Value) -> Result<Value> {
        match self {
            Node::Leaf { e, .. } => Ok(match s {
                Side::Left => e.l().apply(x)?.clone(),
                Side::Right => e.r().apply(x)?.clone(),
            }),
            Node::DepFun(d) => {
                let t = d.decode(s, x).ok_or_else(|| Error::NotInCarrier {
                    value: x.to_string(),
                    carrier: d.spaces[idx(s)].name(),
                })?;
                let o = other(s);
                let (dom, cod) = (d.dom.carrier(o)?, d.cod.carrier(o)?);
                let outs = dom
                    .elements()
                    .iter()
                    .map(|xp| d.cod.map(s, t.at(&d.dom.map(o, xp)?)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(FunTable::from_pairs(dom.clone(), cod, dom.elements().iter().cloned().zip(outs))?.to_value())
            }
            Node::Functor { f, args, .. } => {
                let fns: Vec<Box<ValFn<'_>>> = args
                    .iter()
                    .map(|n| Box::new(move |v: &Value| n.map(s, v)) as Box<ValFn<'_>>)
                    .collect();
                let refs: Vec<&ValFn<'_>> = fns.iter().map(|b| b.as_ref()).collect();
                f.map_with(&refs, x)
            }
            Node::Compose { a, b } => match s {
                Side::Left => b.map(s, &a.map(s, x)?),
                Side::Right => a.map(s, &b.map(s, x)?),
            },
        }
    }

    /// `l` or `r` as a table between finite carriers.
    pub fn map_table(&self, s: Side) -> Result<FunTable> {
        if let Node::Leaf { e, .. } = self {
            return Ok(match s {
                Side::Left => e.l().clone(),
                Side::Right => e.r().clone(),
            });
        }
        let (dom, cod) = (self.carrier(s)?, self.carrier(other(s))?);
        let outs = dom.elements().iter().map(|x| self.map(s, x)).collect::<Result<Vec<_>>>()?;
        FunTable::from_pairs(dom.clone(), cod, dom.elements().iter().cloned().zip(outs))
    }

    /// One side's relation, materialised. At most `cap` pairs are examined.
    pub fn rel_table(&self, s: Side, envs: &Envs, cap: usize) -> Result<Rel> {
        if let Node::Leaf { e, .. } = self {
            return Ok(match s {
                Side::Left => e.left().clone(),
                Side::Right => e.right().clone(),
            });
        }
        let c = self.carrier(s)?;
        pair_cap(&c, cap)?;
        let mut err = None;
        let r = Rel::from_fn(c.clone(), c, |x, y| match self.holds(s, envs, x, y) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                false
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(r),
        }
    }

    /// The full record `(L, R, l, r)` under `envs`, built with the closure
    /// constructions.
    pub fn record(&self, envs: &Envs, cap: usize) -> Result<EquivalenceRecord> {
        match self {
            Node::Leaf { e, .. } => Ok(e.clone()),
            Node::Functor { f, args, .. } => {
                let comps = args.iter().map(|n| n.record(envs, cap)).collect::<Result<Vec<_>>>()?;
                build_functor_closure(f, &comps, cap)
            }
            Node::Compose { a, b } => {
                let input = CompositionInput::new(a.record(envs, cap)?, b.record(envs, cap)?)?;
                build_composition(&input)
            }
            Node::DepFun(d) => {
                self.space(Side::Left).finite()?;
                self.space(Side::Right).finite()?;
                build_dep_fun_closure(&self.funrel_input(d, envs, cap)?).map(|o| o.record)
            }
        }
    }

    fn funrel_input(&self, d: &DepFunNode, envs: &Envs, cap: usize) -> Result<DepFunClosureInput> {
        let e1 = d.dom.record(envs, cap)?;
        let family = |s: Side| -> Result<DepRel> {
            let p = d.dom.carrier(s)?;
            let base = d.cod.carrier(s)?;
            DepRel::from_fn(p.clone(), p, base.clone(), base.clone(), |x1, x2| {
                let inner = d.bind(s, envs, x1, x2);
                if d.guard(s, &inner) {
                    d.cod.rel_table(s, &inner, cap)
                } else {
                    Ok(Rel::full(base.clone(), base.clone()))
                }
            })
        };
        let (l2, r2) = (family(Side::Left)?, family(Side::Right)?);
        let l2f = DepFunTable::constant(e1.beta().clone(), e1.alpha().clone(), d.cod.map_table(Side::Left)?);
        let r2f = DepFunTable::constant(e1.alpha().clone(), e1.beta().clone(), d.cod.map_table(Side::Right)?);
        DepFunClosureInput::new(e1, l2, r2, l2f, r2f, cap)
    }

    /// Binders referenced by guards of side `s` and not bound inside the node.
    pub fn free_binders(&self, s: Side) -> BTreeSet<String> {
        match self {
            Node::Leaf { .. } => BTreeSet::new(),
            Node::DepFun(d) => {
                let mut inner = d.cod.free_binders(s);
                if let Some(g) = &d.guards[idx(s)] {
                    inner.insert(g.args.0.clone());
                    inner.insert(g.args.1.clone());
                }
                let (b1, b2) = &d.binders[idx(s)];
                inner.remove(b1);
                inner.remove(b2);
                inner.extend(d.dom.free_binders(s));
                inner
            }
            Node::Functor { args, .. } => args.iter().flat_map(|n| n.free_binders(s)).collect(),
            Node::Compose { a, b } => {
                let mut out = a.free_binders(s);
                out.extend(b.free_binders(s));
                out
            }
        }
    }

    /// Evidence that the node is a partial Galois equivalence of PERs under
    /// `envs`: registered leaves, and the hypotheses of the closure theorem
    /// at every inner node.
    pub fn certify(&self, envs: &Envs, cap: usize) -> Result<CheckReport> {
        match self {
            Node::Leaf { name, .. } => Ok(CheckReport::pass("registered").with_detail(name.clone())),
            Node::Functor { f, args, .. } => {
                let subs = args.iter().map(|n| n.certify(envs, cap)).collect::<Result<Vec<_>>>()?;
                Ok(CheckReport::all("functor_per_equiv", subs).with_detail(f.to_string()))
            }
            Node::Compose { a, b } => {
                let comm = commutation_check(
                    &a.rel_table(Side::Right, envs, cap)?,
                    &b.rel_table(Side::Left, envs, cap)?,
                )?;
                Ok(CheckReport::all(
                    "composition_per_equiv",
                    vec![a.certify(envs, cap)?, b.certify(envs, cap)?, comm],
                ))
            }
            Node::DepFun(d) => {
                let dom = CheckReport::all("component_per_equiv", vec![d.dom.certify(envs, cap)?]);
                let chains = GaloisChains::collect(d, envs)?;
                let parts = vec![
                    dom,
                    dependent_cases(d, envs, &chains, cap)?,
                    CheckReport::all(
                        "mono_conditions_main",
                        vec![
                            chain_inclusion(d, Side::Left, envs, cap)?.renamed("mono_left_rel"),
                            chain_inclusion(d, Side::Right, envs, cap)?.renamed("mono_right_rel"),
                            field_transport(d, Side::Left, envs, &chains)?,
                            field_transport(d, Side::Right, envs, &chains)?,
                        ],
                    ),
                ];
                Ok(CheckReport::all("closure_per_equiv", parts))
            }
        }
    }
}

/// Galois-related pairs `x ⪅L₁ x'` of the domain and the chains
/// `x₁ ≤L₁ x₂ ⪅L₁ x₁' ≤R₁ x₂'`.
struct GaloisChains {
    pairs: Vec<(Value, Value)>,
    chains: Vec<[Value; 4]>,
}

impl GaloisChains {
    fn collect(d: &DepFunNode, envs: &Envs) -> Result<Self> {
        let (a, b) = (d.dom.carrier(Side::Left)?, d.dom.carrier(Side::Right)?);
        let mut pairs = Vec::new();
        for x in a.elements() {
            for xp in b.elements() {
                if d.dom.holds(Side::Right, envs, xp, xp)?
                    && d.dom.holds(Side::Left, envs, x, &d.dom.map(Side::Right, xp)?)?
                {
                    pairs.push((x.clone(), xp.clone()));
                }
            }
        }
        let mut chains = Vec::new();
        for x1 in a.elements() {
            for (x2, x1p) in &pairs {
                if !d.dom.holds(Side::Left, envs, x1, x2)? {
                    continue;
                }
                for x2p in b.elements() {
                    if d.dom.holds(Side::Right, envs, x1p, x2p)? {
                        chains.push([x1.clone(), x2.clone(), x1p.clone(), x2p.clone()]);
                    }
                }
            }
        }
        chains.sort();
        Ok(GaloisChains { pairs, chains })
    }
}

/// Each case record `(L₂ x (r₁ x'), R₂ (l₁ x) x')` is a PER equivalence.
/// Cases whose guards both fail are the full relations; cases whose guards
/// disagree are rejected.
fn dependent_cases(d: &DepFunNode, envs: &Envs, g: &GaloisChains, cap: usize) -> Result<CheckReport> {
    let name = "dependent_per_equiv";
    for (x, xp) in &g.pairs {
        let inner = d.pair_envs(envs, x, xp)?;
        let w = vec![x.clone(), xp.clone()];
        match (d.guard(Side::Left, &inner), d.guard(Side::Right, &inner)) {
            (true, true) => {
                let c = d.cod.certify(&inner, cap)?;
                if !c.verdict() {
                    let leaf = c.first_failure().unwrap_or(&c).to_string();
                    return Ok(CheckReport::fail(name, w).with_detail(leaf).with_subs(vec![c]));
                }
            }
            (false, false) => {}
            _ => return Ok(CheckReport::fail(name, w).with_detail("guards disagree")),
        }
    }
    Ok(CheckReport::pass(name))
}

/// A case of side `s` up to equality: its guard and its free binders.
type CaseKey = (bool, Vec<Option<Value>>);

/// Memoised case tables and inclusions for one chain check.
struct CaseCache<'a> {
    d: &'a DepFunNode,
    s: Side,
    free: BTreeSet<String>,
    cap: usize,
    tables: HashMap<CaseKey, Rel>,
    included: HashMap<(CaseKey, CaseKey), bool>,
}

impl<'a> CaseCache<'a> {
    fn key(&self, e: &Envs) -> CaseKey {
        let vals = e.side(self.s).restrict(&self.free).into_iter().map(|v| v.cloned()).collect();
        (self.d.guard(self.s, e), vals)
    }

    fn table(&mut self, k: &CaseKey, e: &Envs) -> Result<&Rel> {
        if !self.tables.contains_key(k) {
            let t = self.d.cod.rel_table(self.s, e, self.cap)?;
            self.tables.insert(k.clone(), t);
        }
        Ok(&self.tables[k])
    }

    /// Inclusion `S a ≤ S b`. Cases with equal keys coincide.
    fn included(&mut self, ea: &Envs, eb: &Envs) -> Result<bool> {
        let (ka, kb) = (self.key(ea), self.key(eb));
        if !kb.0 || ka == kb {
            return Ok(true);
        }
        let pair = (ka, kb);
        if let Some(&b) = self.included.get(&pair) {
            return Ok(b);
        }
        let (ka, kb) = &pair;
        let rb = self.table(kb, eb)?.clone();
        let out = if !ka.0 {
            rb.len() == rb.left().len() * rb.right().len()
        } else {
            let ra = self.table(ka, ea)?;
            ra.index_pairs().all(|(i, j)| rb.holds_idx(i, j))
        };
        self.included.insert(pair, out);
        Ok(out)
    }
}

/// `x₁ ≤ x₂ ≤ x₃ ≤ x₄ ⟶ S x₂ x₃ ≤ S x₁ x₄` on side `s`.
fn chain_inclusion(d: &DepFunNode, s: Side, envs: &Envs, cap: usize) -> Result<CheckReport> {
    let c = d.dom.carrier(s)?;
    let mut succ: Vec<Vec<Value>> = Vec::with_capacity(c.len());
    for x in c.elements() {
        let mut out = Vec::new();
        for y in c.elements() {
            if d.dom.holds(s, envs, x, y)? {
                out.push(y.clone());
            }
        }
        succ.push(out);
    }
    let succ_of = |x: &Value| c.index_of(x).map(|i| succ[i].as_slice()).unwrap_or(&[]);
    let mut cache = CaseCache {
        d,
        s,
        free: d.cod.free_binders(s),
        cap,
        tables: HashMap::new(),
        included: HashMap::new(),
    };
    for x1 in c.elements() {
        for x2 in succ_of(x1) {
            for x3 in succ_of(x2) {
                for x4 in succ_of(x3) {
                    let ea = d.bind(s, envs, x2, x3);
                    let eb = d.bind(s, envs, x1, x4);
                    if !cache.included(&ea, &eb)? {
                        return Ok(CheckReport::fail("mono", vec![x1.clone(), x2.clone(), x3.clone(), x4.clone()]));
                    }
                }
            }
        }
    }
    Ok(CheckReport::pass("mono"))
}

/// `M3` (side left) or `M4` (side right): elements in the field of one case
/// are mapped into the field of the opposite case. The maps of the
/// codomain do not depend on binders, and case fields are read off the
/// diagonal since every case is a PER.
fn field_transport(d: &DepFunNode, s: Side, envs: &Envs, g: &GaloisChains) -> Result<CheckReport> {
    let name = match s {
        Side::Left => "mono_l2",
        Side::Right => "mono_r2",
    };
    let o = other(s);
    let ys = d.cod.carrier(s)?;
    let mut images: Vec<Option<Value>> = vec![None; ys.len()];
    for ch in &g.chains {
        let [x1, _, _, x2p] = ch;
        let inner = d.pair_envs(envs, x1, x2p)?;
        let (gs, go) = (d.guard(s, &inner), d.guard(o, &inner));
        if !go {
            continue;
        }
        for (k, y) in ys.elements().iter().enumerate() {
            if gs && !d.cod.holds(s, &inner, y, y)? {
                continue;
            }
            if images[k].is_none() {
                images[k] = Some(d.cod.map(s, y)?);
            }
            let fy = images[k].as_ref().expect("just set");
            if !d.cod.holds(o, &inner, fy, fy)? {
                let mut w = ch.to_vec();
                w.push(y.clone());
                return Ok(CheckReport::fail(name, w));
            }
        }
    }
    Ok(CheckReport::pass(name))
}

/// Builds a dependent-function node, computing its spaces.
pub(crate) fn dep_fun_node(
    binders: [(String, String); 2],
    guards: [Option<BoundGuard>; 2],
    dom: Node,
    cod: Node,
    cap: usize,
) -> Result<Node> {
    let mut spaces = Vec::new();
    for s in [Side::Left, Side::Right] {
        let dc = dom.carrier(s)?;
        let cc = cod.carrier(s)?;
        spaces.push(Space::fun(&dc, &cc, cap));
    }
    let right = spaces.pop().expect("two sides");
    let left = spaces.pop().expect("two sides");
    Ok(Node::DepFun(Box::new(DepFunNode { binders, guards, dom, cod, spaces: [left, right] })))
}
