use std::cell::RefCell;

use pgal_functor::RelFn;
use pgal_galois::galois_relator;
use pgal_relation::CheckReport;
use pgal_value::{Error, FunTable, Value};

use crate::elaborate::{elaborate, Synthesized};
use crate::error::{Result, TransportError};
use crate::expr::{RelExpr, Side};
use crate::registry::Registry;
use crate::synth::{Envs, Node};

/// A transported term with its certificates.
#[derive(Clone, Debug)]
pub struct TransportResult {
    pub term_in: Value,
    pub term_out: Value,
    /// `term_out` decoded, when the synthesised relation is on functions.
    pub term_out_table: Option<FunTable>,
    pub in_dom: CheckReport,
    /// `t ⪅L t'`.
    pub relatedness: CheckReport,
    /// The rewritten relator at `(t, t')`, one sub-report per node.
    pub similarity: CheckReport,
    pub synthesized: Synthesized,
}

/// Transports the registered term `term`.
pub fn transport(reg: &Registry, term: &str, l: &RelExpr, r: &RelExpr) -> Result<TransportResult> {
    let t = reg.function(term)?.to_value();
    transport_value(reg, term, &t, l, r)
}

/// Transports an explicit value; `label` names it in errors.
pub fn transport_value(reg: &Registry, label: &str, t: &Value, l: &RelExpr, r: &RelExpr) -> Result<TransportResult> {
    let syn = elaborate(reg, l, r)?;
    let in_dom = syn.in_dom_report(t)?;
    if !in_dom.verdict() {
        return Err(TransportError::NotInDom { term: label.to_string(), report: Box::new(in_dom) });
    }
    let out = syn.l(t)?;
    let relatedness = CheckReport::all(
        "galois_related",
        vec![
            CheckReport::from_bool("in_codom_right", syn.right_holds(&out, &out)?),
            CheckReport::from_bool("left_related_to_r_image", syn.left_holds(t, &syn.r(&out)?)?),
        ],
    );
    if !relatedness.verdict() {
        return Err(TransportError::Unrelated { report: Box::new(relatedness) });
    }
    let similarity = similar(&syn.node, &Envs::default(), t, &out)?;
    let term_out_table = match &syn.node {
        Node::DepFun(_) => {
            let (dom, cod) = dom_cod(&syn.node, Side::Right)?;
            Some(FunTable::from_value(dom, cod, &out)?)
        }
        _ => None,
    };
    Ok(TransportResult {
        term_in: t.clone(),
        term_out: out,
        term_out_table,
        in_dom,
        relatedness,
        similarity,
        synthesized: syn,
    })
}

fn dom_cod(n: &Node, s: Side) -> pgal_value::Result<(std::sync::Arc<pgal_value::Carrier>, std::sync::Arc<pgal_value::Carrier>)> {
    match n {
        Node::DepFun(d) => Ok((d.dom.carrier(s)?, d.cod.carrier(s)?)),
        _ => Err(Error::Wiring("not a function relation".into())),
    }
}

/// The Galois relator in rewritten form: registered leaves use their own
/// Galois relator, dependent functions the function relator over the
/// parameterised Galois relators, functors the functor relator over the
/// arguments' Galois relators, and compositions the relational composite.
pub(crate) fn similar(n: &Node, envs: &Envs, x: &Value, y: &Value) -> Result<CheckReport> {
    match n {
        Node::Leaf { name, e } => {
            let g = galois_relator(e.left(), e.right(), e.r())?;
            Ok(CheckReport::from_bool("galois_rel", g.holds(x, y)).with_detail(name.clone()))
        }
        Node::DepFun(d) => {
            let name = "dep_fun_relator";
            let (dl, dr) = (d.dom.carrier(Side::Left)?, d.dom.carrier(Side::Right)?);
            let (cl, cr) = (d.cod.carrier(Side::Left)?, d.cod.carrier(Side::Right)?);
            let (Ok(f), Ok(g)) = (
                FunTable::from_value(dl.clone(), cl, x),
                FunTable::from_value(dr.clone(), cr, y),
            ) else {
                return Ok(CheckReport::fail_plain(name).with_detail("not a function of the expected type"));
            };
            for a in dl.elements() {
                for b in dr.elements() {
                    let related = d.dom.holds(Side::Right, envs, b, b)?
                        && d.dom.holds(Side::Left, envs, a, &d.dom.map(Side::Right, b)?)?;
                    if !related {
                        continue;
                    }
                    let inner = d.pair_envs(envs, a, b)?;
                    if !(d.guard(Side::Left, &inner) && d.guard(Side::Right, &inner)) {
                        // An unguarded case is the full relation on both sides.
                        continue;
                    }
                    let sub = similar(&d.cod, &inner, f.at(a), g.at(b))?;
                    if !sub.verdict() {
                        let mut w = vec![a.clone(), b.clone()];
                        w.extend(sub.witness.clone().unwrap_or_default());
                        return Ok(CheckReport::fail(name, w).with_subs(vec![sub]));
                    }
                }
            }
            Ok(CheckReport::pass(name))
        }
        Node::Functor { f, args, .. } => {
            let err: RefCell<Option<TransportError>> = RefCell::new(None);
            let fns: Vec<Box<RelFn<'_>>> = args
                .iter()
                .map(|a| {
                    let err = &err;
                    Box::new(move |u: &Value, v: &Value| match similar(a, envs, u, v) {
                        Ok(r) => r.verdict(),
                        Err(e) => {
                            err.borrow_mut().get_or_insert(e);
                            false
                        }
                    }) as Box<RelFn<'_>>
                })
                .collect();
            let refs: Vec<&RelFn<'_>> = fns.iter().map(|b| b.as_ref()).collect();
            let ok = f.rel_with(&refs, x, y);
            drop(refs);
            drop(fns);
            if let Some(e) = err.into_inner() {
                return Err(e);
            }
            Ok(CheckReport::from_bool("functor_relator", ok).with_detail(f.to_string()))
        }
        Node::Compose { a, b } => {
            let mid = a.carrier(Side::Right)?;
            for m in mid.elements() {
                if similar(a, envs, x, m)?.verdict() && similar(b, envs, m, y)?.verdict() {
                    return Ok(CheckReport::pass("composite_relator"));
                }
            }
            Ok(CheckReport::fail_plain("composite_relator"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_rel_expr;
    use pgal_galois::EquivalenceRecord;
    use pgal_relation::Rel;
    use pgal_value::Carrier;
    use std::sync::Arc;

    fn registry() -> Registry {
        let c = Arc::new(Carrier::ints("B2", 0, 1));
        let id = EquivalenceRecord::identity(c.clone());
        Registry::default()
            .with_carrier("B2", c.clone())
            .unwrap()
            .with_relation("E", Rel::equality(c.clone()))
            .unwrap()
            .register_equivalence("id", id)
            .unwrap()
            .with_function("not", FunTable::from_fn(c.clone(), c, |v| Value::Int(1 - v.as_int().unwrap())).unwrap())
            .unwrap()
    }

    #[test]
    fn identity_transport_is_identity() {
        let reg = registry();
        let e = parse_rel_expr("fun(_ _: atom E) -> atom E").unwrap();
        let res = transport(&reg, "not", &e, &e).unwrap();
        assert_eq!(res.term_out, res.term_in);
        assert!(res.relatedness.verdict());
        assert!(res.similarity.verdict());
        assert!(res.synthesized.record().is_ok());
    }

    #[test]
    fn shapes_must_be_parallel() {
        let reg = registry();
        let l = parse_rel_expr("fun(_ _: atom E) -> atom E").unwrap();
        let r = parse_rel_expr("atom E").unwrap();
        assert!(matches!(transport(&reg, "not", &l, &r), Err(TransportError::ShapeMismatch { .. })));
    }

    #[test]
    fn unknown_names_are_reported() {
        let reg = registry();
        let e = parse_rel_expr("atom Missing").unwrap();
        assert!(matches!(elaborate(&reg, &e, &e), Err(TransportError::Unresolved { .. })));
        let g = parse_rel_expr("fun(x _: atom E if lt(x,y)) -> atom E").unwrap();
        assert!(matches!(elaborate(&reg, &g, &g), Err(TransportError::Unresolved { .. })));
    }
}
