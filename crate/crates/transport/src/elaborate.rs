use std::sync::Arc;

use pgal_galois::{galois_class_check, EquivalenceRecord, GaloisClass};
use pgal_relation::{CheckReport, Rel};
use pgal_value::{Carrier, Error, Value};

use crate::error::{Result, TransportError};
use crate::expr::{Guard, RelExpr, Side, WILDCARD};
use crate::registry::Registry;
use crate::synth::{dep_fun_node, BoundGuard, Envs, Node, Space};

/// Binders in scope on one side, innermost last, with their carriers.
#[derive(Clone, Default)]
struct Scope(Vec<(String, Arc<Carrier>)>);

impl Scope {
    fn push(&self, name: &str, c: &Arc<Carrier>) -> Scope {
        let mut out = self.clone();
        if name != WILDCARD {
            out.0.push((name.to_string(), c.clone()));
        }
        out
    }

    fn get(&self, name: &str) -> Option<&Arc<Carrier>> {
        self.0.iter().rev().find(|(n, _)| n == name).map(|(_, c)| c)
    }
}

fn leaf_rel(reg: &Registry, e: &RelExpr) -> Result<Rel> {
    Ok(match e {
        RelExpr::Atom(n) => reg.relation(n)?.clone(),
        RelExpr::Eq(c) => Rel::equality(reg.carrier(c)?.clone()),
        RelExpr::EquivSide(n, s) => {
            let rec = reg.equivalence(n)?;
            match s {
                Side::Left => rec.left().clone(),
                Side::Right => rec.right().clone(),
            }
        }
        _ => unreachable!("leaf_rel on a non-leaf"),
    })
}

/// The registered equivalence between two leaves. `left E` against
/// `right E` names it directly; otherwise the first registration (by name)
/// with exactly these relations is used, and equality on one carrier
/// against itself falls back to the identity.
fn resolve_leaf(reg: &Registry, l: &RelExpr, r: &RelExpr) -> Result<Node> {
    if let (RelExpr::EquivSide(a, Side::Left), RelExpr::EquivSide(b, Side::Right)) = (l, r) {
        if a == b {
            return Ok(Node::Leaf { name: a.clone(), e: reg.equivalence(a)?.clone() });
        }
    }
    let (lr, rr) = (leaf_rel(reg, l)?, leaf_rel(reg, r)?);
    if let Some((name, e)) = reg.equivalences().find(|(_, e)| *e.left() == lr && *e.right() == rr) {
        return Ok(Node::Leaf { name: name.clone(), e: e.clone() });
    }
    if let (RelExpr::Eq(a), RelExpr::Eq(b)) = (l, r) {
        if a == b {
            let c = reg.carrier(a)?.clone();
            return Ok(Node::Leaf { name: format!("eq {a}"), e: EquivalenceRecord::identity(c) });
        }
    }
    Err(TransportError::Unresolved { kind: "equivalence", name: format!("{l} / {r}") })
}

fn bind_guard(reg: &Registry, g: &Guard, scope: &Scope) -> Result<BoundGuard> {
    let rel = reg.condition(&g.cond)?.clone();
    let (a, b) = &g.args;
    let unbound = |n: &str| TransportError::Unresolved { kind: "binder", name: n.to_string() };
    let ca = scope.get(a).ok_or_else(|| unbound(a))?;
    let cb = scope.get(b).ok_or_else(|| unbound(b))?;
    let ctx = format!("guard {}({a},{b})", g.cond);
    rel.left().expect_same(ca, &ctx)?;
    rel.right().expect_same(cb, &ctx)?;
    Ok(BoundGuard { rel, args: g.args.clone() })
}

fn build(reg: &Registry, l: &RelExpr, r: &RelExpr, scopes: &[Scope; 2]) -> Result<Node> {
    let mismatch = || TransportError::ShapeMismatch { left: l.to_string(), right: r.to_string() };
    let cap = reg.cap();
    match (l, r) {
        _ if l.is_leaf() && r.is_leaf() => resolve_leaf(reg, l, r),
        (
            RelExpr::DepFun { binder1: lb1, binder2: lb2, dom: ld, guard: lg, cod: lc },
            RelExpr::DepFun { binder1: rb1, binder2: rb2, dom: rd, guard: rg, cod: rc },
        ) => {
            let dom = build(reg, ld, rd, scopes)?;
            let (da, db) = (dom.carrier(Side::Left)?, dom.carrier(Side::Right)?);
            let inner = [scopes[0].push(lb1, &da).push(lb2, &da), scopes[1].push(rb1, &db).push(rb2, &db)];
            let guards = [
                lg.as_ref().map(|g| bind_guard(reg, g, &inner[0])).transpose()?,
                rg.as_ref().map(|g| bind_guard(reg, g, &inner[1])).transpose()?,
            ];
            let cod = build(reg, lc, rc, &inner)?;
            Ok(dep_fun_node(
                [(lb1.clone(), lb2.clone()), (rb1.clone(), rb2.clone())],
                guards,
                dom,
                cod,
                cap,
            )?)
        }
        (RelExpr::Functor(ln, la), RelExpr::Functor(rn, ra)) => {
            if ln != rn || la.len() != ra.len() {
                return Err(mismatch());
            }
            let f = reg.functor(ln)?;
            if f.arity() != la.len() {
                return Err(Error::Wiring(format!("functor {ln} takes {} arguments, got {}", f.arity(), la.len())).into());
            }
            let args = la
                .iter()
                .zip(ra)
                .map(|(a, b)| build(reg, a, b, scopes))
                .collect::<Result<Vec<_>>>()?;
            let side = |s: Side| -> Result<Arc<Carrier>> {
                let cs = args.iter().map(|n| n.carrier(s)).collect::<pgal_value::Result<Vec<_>>>()?;
                Ok(f.build_carrier(&cs, cap)?)
            };
            let carriers = [side(Side::Left)?, side(Side::Right)?];
            Ok(Node::Functor { f, args, carriers })
        }
        (RelExpr::Compose(la, lb), RelExpr::Compose(ra, rb)) => {
            let a = build(reg, la, ra, scopes)?;
            let b = build(reg, lb, rb, scopes)?;
            a.carrier(Side::Right)?.expect_same(b.carrier(Side::Left)?.as_ref(), "composition middle")?;
            a.carrier(Side::Left)?;
            b.carrier(Side::Right)?;
            Ok(Node::Compose { a: Box::new(a), b: Box::new(b) })
        }
        _ => Err(mismatch()),
    }
}

/// A synthesised partial Galois equivalence of PERs.
#[derive(Clone, Debug)]
pub struct Synthesized {
    pub(crate) node: Node,
    certificate: CheckReport,
    record: Option<EquivalenceRecord>,
    cap: usize,
}

/// Synthesises the equivalence between `l` and `r` by structural recursion,
/// re-checking every side condition. When the result fits the cap it is
/// also materialised and checked to be a PER equivalence directly.
pub fn elaborate(reg: &Registry, l: &RelExpr, r: &RelExpr) -> Result<Synthesized> {
    let node = build(reg, l, r, &[Scope::default(), Scope::default()])?;
    let envs = Envs::default();
    let cert = node.certify(&envs, reg.cap())?;
    if !cert.verdict() {
        return Err(TransportError::SideCondition { report: Box::new(cert) });
    }
    let (certificate, record) = match node.record(&envs, reg.cap()) {
        Ok(rec) => {
            let direct = galois_class_check(GaloisClass::PerEquiv, &rec).renamed("result_per_equiv");
            let all = CheckReport::all("synthesized_per_equiv", vec![cert, direct]);
            if !all.verdict() {
                return Err(TransportError::SideCondition { report: Box::new(all) });
            }
            (all, Some(rec))
        }
        Err(Error::CapExceeded { .. }) => {
            let all = CheckReport::all("synthesized_per_equiv", vec![cert]).with_detail("not materialised");
            (all, None)
        }
        Err(e) => return Err(e.into()),
    };
    Ok(Synthesized { node, certificate, record, cap: reg.cap() })
}

impl Synthesized {
    /// Side conditions discharged during synthesis.
    pub fn certificate(&self) -> &CheckReport {
        &self.certificate
    }

    /// The materialised record, if it fits the cap.
    pub fn record(&self) -> Result<&EquivalenceRecord> {
        match &self.record {
            Some(r) => Ok(r),
            None => Err(Error::CapExceeded {
                what: format!("synthesised record over {}", self.space(Side::Left).name()),
                count: "more".into(),
                cap: self.cap,
            }
            .into()),
        }
    }

    pub fn space(&self, s: Side) -> Space {
        self.node.space(s)
    }

    /// `≤L x y`.
    pub fn left_holds(&self, x: &Value, y: &Value) -> Result<bool> {
        Ok(self.node.holds(Side::Left, &Envs::default(), x, y)?)
    }

    /// `≤R x y`.
    pub fn right_holds(&self, x: &Value, y: &Value) -> Result<bool> {
        Ok(self.node.holds(Side::Right, &Envs::default(), x, y)?)
    }

    pub fn l(&self, x: &Value) -> Result<Value> {
        Ok(self.node.map(Side::Left, x)?)
    }

    pub fn r(&self, y: &Value) -> Result<Value> {
        Ok(self.node.map(Side::Right, y)?)
    }

    /// `x ⪅L y`. Both relations are PERs, so `in_codom ≤R y` is `≤R y y`.
    pub fn galois_holds(&self, x: &Value, y: &Value) -> Result<bool> {
        Ok(self.right_holds(y, y)? && self.left_holds(x, &self.r(y)?)?)
    }

    /// Membership of `x` in the domain of `≤L`, which for a PER is `≤L x x`.
    /// A failure carries the nested arguments of the first failing clause.
    pub fn in_dom_report(&self, x: &Value) -> Result<CheckReport> {
        if !self.space(Side::Left).contains(x) {
            return Ok(CheckReport::fail_plain("in_dom").with_detail(format!(
                "{x} is not in {}",
                self.space(Side::Left).name()
            )));
        }
        let w = self.node.violation(Side::Left, &Envs::default(), x, x)?;
        Ok(CheckReport::from_witness("in_dom", w))
    }
}
