//! Seeded random closure inputs for soundness sweeps.
//!
//! Instances are built around a PER equivalence `E2` on the bases. Each
//! family case is either the matching side of `E2` or the full relation,
//! selected by a guard on the first parameter, so that the dependent
//! hypotheses hold often enough for the sweep to exercise the conclusion.

use std::sync::Arc;

use pgal_fixtures::random::{any_record, random_fun, random_per_equiv, random_rel, small_carrier};
use pgal_galois::EquivalenceRecord;
use pgal_relation::{DepFunTable, DepRel, Rel};
use pgal_value::{Carrier, FunTable};
use rand::Rng;

use crate::DepFunClosureInput;

fn guarded(rng: &mut impl Rng, p: &Arc<Carrier>, guard: &[bool], case: &Rel) -> DepRel {
    let full = Rel::full(case.left().clone(), case.right().clone());
    let mut d = DepRel::constant(p.clone(), p.clone(), full.clone());
    for (i, x) in p.elements().iter().enumerate() {
        for y in p.elements() {
            let rel = if guard[i] { case.clone() } else { full.clone() };
            d.set(x, y, rel).expect("wiring");
        }
    }
    if rng.gen_bool(0.15) {
        let (i, j) = (rng.gen_range(0..p.len()), rng.gen_range(0..p.len()));
        let noise = random_rel(rng, case.left(), case.right(), 0.5);
        d.set(&p.elements()[i], &p.elements()[j], noise).expect("wiring");
    }
    d
}

fn maps(rng: &mut impl Rng, p1: &Arc<Carrier>, p2: &Arc<Carrier>, base: &FunTable) -> DepFunTable {
    let mut d = DepFunTable::constant(p1.clone(), p2.clone(), base.clone());
    if rng.gen_bool(0.15) {
        let (i, j) = (rng.gen_range(0..p1.len()), rng.gen_range(0..p2.len()));
        let t = random_fun(rng, base.dom(), base.cod());
        d.set(&p1.elements()[i], &p2.elements()[j], t).expect("wiring");
    }
    d
}

/// A random closure input with parameters and bases of 2 or 3 elements.
pub fn random_closure_input(rng: &mut impl Rng, cap: usize) -> DepFunClosureInput {
    let size = |rng: &mut dyn rand::RngCore| rng.gen_range(2..=3usize);
    let a1 = small_carrier("A1", size(rng));
    let a2 = small_carrier("A2", size(rng));
    let b1 = small_carrier("B1", 2);
    let b2 = small_carrier("B2", size(rng));
    let e1: EquivalenceRecord = if rng.gen_bool(0.7) {
        random_per_equiv(rng, &a1, &a2)
    } else {
        any_record(rng, &a1, &a2)
    };
    let e2 = if rng.gen_bool(0.8) {
        random_per_equiv(rng, &b1, &b2)
    } else {
        any_record(rng, &b1, &b2)
    };
    let guard_l: Vec<bool> = (0..a1.len()).map(|_| rng.gen_bool(0.6)).collect();
    let guard_r: Vec<bool> = if rng.gen_bool(0.8) {
        (0..a2.len()).map(|j| guard_l[e1.r().apply_idx(j)]).collect()
    } else {
        (0..a2.len()).map(|_| rng.gen_bool(0.6)).collect()
    };
    let l2 = guarded(rng, &a1, &guard_l, e2.left());
    let r2 = guarded(rng, &a2, &guard_r, e2.right());
    let l2f = maps(rng, &a2, &a1, e2.l());
    let r2f = maps(rng, &a1, &a2, e2.r());
    DepFunClosureInput::new(e1, l2, r2, l2f, r2f, cap).expect("wiring")
}
