//! Small-scope search for instances showing a hypothesis is needed.
//!
//! Every claim is a checkable statement with named hypotheses. Instances
//! are enumerated in a fixed order (smaller carriers first), so the first
//! instance whose remaining hypotheses hold but whose conclusion fails is the
//! reported minimum.

use std::sync::Arc;

use pgal_compose::{verify_comp_theorem, CompStar, CompositionInput};
use pgal_fixtures as fx;
use pgal_funrel::{verify_closure_theorem, DepFunClosureInput};
use pgal_galois::{galois_class_check, EquivalenceRecord, GaloisClass};
use pgal_relation::{rel_if, CheckReport, DepFunTable, DepRel, Rel};
use pgal_value::{enumerate_fun_tables, Carrier, Error, FunTable};

use crate::error::{Result, TransportError};
use crate::expr::parse_rel_expr;
use crate::registry::Registry;
use crate::transport::transport;

/// Limits on the instance space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Largest carrier size.
    pub max_size: usize,
    /// Most instances examined before declaring the bounds exhausted.
    pub budget: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_size: 3, budget: 20_000 }
    }
}

/// Hypothesis id meaning that nothing is dropped.
pub const NOTHING: &str = "none";

/// Claims and their droppable hypotheses.
pub const CLAIMS: &[(&str, &[&str])] = &[
    ("comp_galequiv", &["component_1_per_equiv", "component_2_per_equiv", "commutation"]),
    ("depfunrel_galequiv", &["component_per_equiv", "dependent_per_equiv", "mono_conditions_main"]),
    ("subtraction_transport", &["dependency_guard"]),
];

/// Largest carrier size the enumerations accept.
const MAX_SEARCH_SIZE: usize = 3;

fn carrier(n: usize) -> Arc<Carrier> {
    Arc::new(Carrier::ints(format!("C{n}"), 0, n as i64 - 1))
}

/// All PERs on `c`, as partial partitions in restricted-growth order.
pub fn all_pers(c: &Arc<Carrier>) -> Vec<Rel> {
    let n = c.len();
    let mut out = Vec::new();
    // Block labels: 0 means outside the field, k > 0 the k-th class.
    let mut labels = vec![0usize; n];
    fn go(i: usize, used: usize, labels: &mut Vec<usize>, c: &Arc<Carrier>, out: &mut Vec<Rel>) {
        if i == labels.len() {
            let pairs = (0..labels.len())
                .flat_map(|a| (0..labels.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| labels[a] != 0 && labels[a] == labels[b])
                .collect::<Vec<_>>();
            out.push(Rel::from_index_pairs(c.clone(), c.clone(), pairs));
            return;
        }
        for k in 0..=used + 1 {
            labels[i] = k;
            go(i + 1, used.max(k), labels, c, out);
        }
    }
    go(0, 0, &mut labels, c, &mut out);
    out
}

/// Records `(L, R, l, r)` with PERs `L`, `R`, in enumeration order, keeping
/// only PER equivalences when `per_only`.
fn records(a: usize, b: usize, per_only: bool) -> Result<Vec<EquivalenceRecord>> {
    let (ca, cb) = (carrier(a), carrier(b));
    let ls = enumerate_fun_tables(&ca, &cb, usize::MAX)?;
    let rs = enumerate_fun_tables(&cb, &ca, usize::MAX)?;
    let (pa, pb) = (all_pers(&ca), all_pers(&cb));
    let mut out = Vec::new();
    for left in &pa {
        for right in &pb {
            for l in &ls {
                for r in &rs {
                    let e = EquivalenceRecord::new(left.clone(), right.clone(), l.clone(), r.clone())?;
                    if !per_only || galois_class_check(GaloisClass::PerEquiv, &e).verdict() {
                        out.push(e);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn sizes(k: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| (1..=max).map(move |n| [v.clone(), vec![n]].concat()))
            .collect();
    }
    out.sort_by_key(|v| (v.iter().sum::<usize>(), v.clone()));
    out
}

fn describe(e: &EquivalenceRecord) -> String {
    let pairs = |r: &Rel| {
        r.pairs().map(|(x, y)| format!("({x},{y})")).collect::<Vec<_>>().join("")
    };
    let table = |t: &FunTable| t.outputs().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
    format!(
        "L={{{}}} R={{{}}} l=[{}] r=[{}]",
        pairs(e.left()),
        pairs(e.right()),
        table(e.l()),
        table(e.r())
    )
}

/// A theorem report refutes the weakened claim when every hypothesis other
/// than `dropped` passes and the conclusion fails.
fn refutes(report: &CheckReport, dropped: &str) -> bool {
    let [hyps, concl] = report.sub_reports.as_slice() else { return false };
    hyps.sub_reports.iter().all(|h| h.property == dropped || h.verdict()) && concl.is_fail()
}

struct Search {
    name: String,
    budget: usize,
    seen: usize,
}

impl Search {
    /// `Some(report)` stops the search.
    fn visit(&mut self, report: CheckReport, dropped: &str, detail: impl FnOnce() -> String) -> Option<CheckReport> {
        self.seen += 1;
        if refutes(&report, dropped) {
            let w = report.sub_reports[1].first_failure().and_then(|f| f.witness.clone());
            let mut out = match w {
                Some(w) => CheckReport::fail(self.name.clone(), w),
                None => CheckReport::fail_plain(self.name.clone()),
            };
            out = out.with_detail(detail()).with_subs(vec![report]);
            return Some(out);
        }
        None
    }

    fn exhausted(&self) -> bool {
        self.seen >= self.budget
    }

    fn finish(self) -> CheckReport {
        let why = if self.seen >= self.budget { "budget reached" } else { "bounds exhausted" };
        CheckReport::pass(self.name).with_detail(format!("no counterexample in {} instances ({why})", self.seen))
    }
}

/// Searches for an instance of `claim` where every hypothesis except
/// `dropped` holds but the conclusion fails. A found instance is a `Fail`
/// report carrying the conclusion's witness; otherwise the report passes
/// with the number of instances examined.
pub fn counterexample_search(claim: &str, dropped: &str, bounds: SearchBounds) -> Result<CheckReport> {
    let (_, hyps) = CLAIMS
        .iter()
        .find(|(c, _)| *c == claim)
        .ok_or_else(|| TransportError::UnknownId { kind: "claim", name: claim.to_string() })?;
    if dropped != NOTHING && !hyps.contains(&dropped) {
        return Err(TransportError::UnknownId { kind: "hypothesis", name: dropped.to_string() });
    }
    if bounds.max_size == 0 || bounds.max_size > MAX_SEARCH_SIZE {
        return Err(Error::CapExceeded {
            what: "search carrier size".into(),
            count: bounds.max_size.to_string(),
            cap: MAX_SEARCH_SIZE,
        }
        .into());
    }
    let mut s = Search { name: format!("{claim}_without_{dropped}"), budget: bounds.budget, seen: 0 };
    let found = match claim {
        "comp_galequiv" => search_comp(&mut s, dropped, bounds)?,
        "depfunrel_galequiv" => search_depfun(&mut s, dropped, bounds)?,
        _ => search_subtraction(&mut s, dropped, bounds)?,
    };
    Ok(found.unwrap_or_else(|| s.finish()))
}

fn search_comp(s: &mut Search, dropped: &str, b: SearchBounds) -> Result<Option<CheckReport>> {
    let per1 = dropped != "component_1_per_equiv";
    let per2 = dropped != "component_2_per_equiv";
    for sz in sizes(3, b.max_size) {
        let e1s = records(sz[0], sz[1], per1)?;
        let e2s = records(sz[1], sz[2], per2)?;
        for e1 in &e1s {
            for e2 in &e2s {
                if s.exhausted() {
                    return Ok(None);
                }
                let input = CompositionInput::new(e1.clone(), e2.clone())?;
                let rep = verify_comp_theorem(&input, CompStar::PerEquiv)?;
                let found = s.visit(rep, dropped, || format!("E1: {}; E2: {}", describe(e1), describe(e2)));
                if found.is_some() {
                    return Ok(found);
                }
            }
        }
    }
    Ok(None)
}

/// Guarded families `L₂ x₁ x₂ = rel_if (G x₁ x₂) L`, `R₂ x₁' x₂' = rel_if
/// (G (r₁ x₁') (r₁ x₂')) R` over every guard `G`.
fn search_depfun(s: &mut Search, dropped: &str, b: SearchBounds) -> Result<Option<CheckReport>> {
    let per1 = dropped != "component_per_equiv";
    let per2 = dropped != "dependent_per_equiv";
    let max = b.max_size.min(2);
    for sz in sizes(4, max) {
        let e1s = records(sz[0], sz[1], per1)?;
        let e2s = records(sz[2], sz[3], per2)?;
        let a1 = carrier(sz[0]);
        let guards = all_relations(&a1);
        for e1 in &e1s {
            for e2 in &e2s {
                for g in &guards {
                    if s.exhausted() {
                        return Ok(None);
                    }
                    let input = guarded_input(e1, e2, g)?;
                    let rep = verify_closure_theorem(&input, GaloisClass::PerEquiv)?;
                    let found = s.visit(rep, dropped, || {
                        let gp = g.pairs().map(|(x, y)| format!("({x},{y})")).collect::<String>();
                        format!("E1: {}; E2: {}; G={{{gp}}}", describe(e1), describe(e2))
                    });
                    if found.is_some() {
                        return Ok(found);
                    }
                }
            }
        }
    }
    Ok(None)
}

fn all_relations(c: &Arc<Carrier>) -> Vec<Rel> {
    let n = c.len();
    (0u32..1 << (n * n))
        .map(|bits| {
            let pairs = (0..n * n).filter(|k| bits >> k & 1 == 1).map(|k| (k / n, k % n));
            Rel::from_index_pairs(c.clone(), c.clone(), pairs.collect::<Vec<_>>())
        })
        .collect()
}

fn guarded_input(e1: &EquivalenceRecord, e2: &EquivalenceRecord, g: &Rel) -> Result<DepFunClosureInput> {
    let (a1, b1) = (e1.alpha().clone(), e1.beta().clone());
    let l2 = DepRel::from_fn(a1.clone(), a1.clone(), e2.alpha().clone(), e2.alpha().clone(), |x1, x2| {
        Ok(rel_if(g.holds(x1, x2), e2.left()))
    })?;
    let r2 = DepRel::from_fn(b1.clone(), b1.clone(), e2.beta().clone(), e2.beta().clone(), |x1, x2| {
        Ok(rel_if(g.holds(e1.r().at(x1), e1.r().at(x2)), e2.right()))
    })?;
    let l2f = DepFunTable::constant(b1.clone(), a1.clone(), e2.l().clone());
    let r2f = DepFunTable::constant(a1, b1, e2.r().clone());
    Ok(DepFunClosureInput::new(e1.clone(), l2, r2, l2f, r2f, pgal_value::DEFAULT_CAP)?)
}

/// Registry for guarded subtraction over `{-k..k}` and `{0..k}`.
pub fn subtraction_registry(k: i64) -> Result<Registry> {
    let ints = fx::ints(&format!("Int{}", 2 * k + 1), -k, k);
    let nats = fx::ints(&format!("Nat{}", k + 1), 0, k);
    let rec = EquivalenceRecord::new(
        fx::zpos_on(ints.clone()),
        Rel::equality(nats.clone()),
        fx::to_nat_on(ints.clone(), nats.clone()),
        fx::to_int_on(nats.clone(), ints.clone()),
    )?;
    let inner = pgal_value::fun_space(&ints, &ints, pgal_value::DEFAULT_CAP)?;
    let minus = FunTable::from_fn(ints.clone(), inner, |i1| {
        fx::minus_int_table(&ints, fx::int(i1)).to_value()
    })?;
    Registry::default()
        .with_carrier(ints.name(), ints.clone())?
        .with_carrier(nats.name(), nats.clone())?
        .with_relation("Zpos", fx::zpos_on(ints.clone()))?
        .with_condition("geq", fx::geq_on(ints.clone()))?
        .with_condition("geq_nat", fx::geq_on(nats.clone()))?
        .register_equivalence("ZN", rec)?
        .with_function("minus", minus)
}

/// Guarded `(−ℤ)` expressions over the carriers of [`subtraction_registry`].
pub fn subtraction_exprs(k: i64, guarded: bool) -> (String, String) {
    let nat = format!("Nat{}", k + 1);
    let (gl, gr) = if guarded { (" if geq(i1,i2)", " if geq_nat(n1,n2)") } else { ("", "") };
    (
        format!("fun(i1 _: atom Zpos) -> fun(i2 _: atom Zpos{gl}) -> atom Zpos"),
        format!("fun(n1 _: eq {nat}) -> fun(n2 _: eq {nat}{gr}) -> eq {nat}"),
    )
}

/// The claim "(−ℤ) transports through the guarded expression", whose only
/// hypothesis is the guard.
fn search_subtraction(s: &mut Search, dropped: &str, b: SearchBounds) -> Result<Option<CheckReport>> {
    let guarded = dropped != "dependency_guard";
    let mut k = 1;
    while 2 * k + 1 <= b.max_size as i64 && !s.exhausted() {
        let reg = subtraction_registry(k)?;
        let (l, r) = subtraction_exprs(k, guarded);
        let (l, r) = (parse_rel_expr(&l)?, parse_rel_expr(&r)?);
        let hyp = CheckReport::from_bool("dependency_guard", guarded);
        let concl = match transport(&reg, "minus", &l, &r) {
            Ok(res) => CheckReport::all("transported", vec![res.in_dom, res.relatedness]),
            Err(TransportError::NotInDom { report, .. }) => CheckReport::all("transported", vec![*report]),
            Err(e) => return Err(e),
        };
        let rep = CheckReport::theorem("subtraction_transport", vec![hyp], concl);
        let found = s.visit(rep, dropped, || format!("carriers Int{} and Nat{}", 2 * k + 1, k + 1));
        if found.is_some() {
            return Ok(found);
        }
        k += 1;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn per_counts_are_partial_bell_numbers() {
        // Σₖ C(n,k)·Bell(k): 2, 5, 15.
        for (n, want) in [(1, 2), (2, 5), (3, 15)] {
            assert_eq!(all_pers(&carrier(n)).len(), want);
        }
    }

    #[test]
    fn bad_ids_are_errors() {
        let b = SearchBounds::default();
        assert!(matches!(counterexample_search("nope", NOTHING, b), Err(TransportError::UnknownId { .. })));
        assert!(matches!(
            counterexample_search("comp_galequiv", "nope", b),
            Err(TransportError::UnknownId { kind: "hypothesis", .. })
        ));
        let big = SearchBounds { max_size: 9, budget: 1 };
        assert!(counterexample_search("comp_galequiv", NOTHING, big).is_err());
    }

    #[test]
    fn size_order_is_by_total() {
        let s = sizes(2, 2);
        assert_eq!(s, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
    }
}
