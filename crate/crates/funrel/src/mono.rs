use std::collections::HashMap;

use pgal_relation::{CheckReport, DepRel, Rel};
use pgal_value::Value;

use crate::DepFunClosureInput;

/// Which statement of the monotonicity conditions to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonoVariant {
    /// `M1`–`M4` as used by the equivalence theorems.
    Main,
    /// `M1`, `M2` bounded by the unit and counit, as used for connections.
    Appendix,
}

impl MonoVariant {
    pub fn name(self) -> &'static str {
        match self {
            MonoVariant::Main => "main",
            MonoVariant::Appendix => "appendix",
        }
    }
}

impl std::str::FromStr for MonoVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "main" => Ok(MonoVariant::Main),
            "appendix" => Ok(MonoVariant::Appendix),
            _ => Err(format!("unknown variant {s:?}")),
        }
    }
}

/// Inclusion `D a ≤ D b` between cases of a family, memoised on case ids.
pub(crate) struct CaseInclusion<'a> {
    d: &'a DepRel,
    memo: HashMap<(usize, usize), Option<(usize, usize)>>,
}

impl<'a> CaseInclusion<'a> {
    pub(crate) fn new(d: &'a DepRel) -> Self {
        CaseInclusion {
            d,
            memo: HashMap::new(),
        }
    }

    /// Smallest pair of `D a` missing from `D b`.
    pub(crate) fn missing(&mut self, a: (usize, usize), b: (usize, usize)) -> Option<(usize, usize)> {
        let (ka, kb) = (self.d.case_id(a.0, a.1), self.d.case_id(b.0, b.1));
        if ka == kb {
            return None;
        }
        let cases = self.d.distinct_cases();
        *self.memo.entry((ka, kb)).or_insert_with(|| {
            let (ra, rb) = (&cases[ka], &cases[kb]);
            ra.index_pairs().find(|&(y, z)| !rb.holds_idx(y, z))
        })
    }
}

fn vals(c: &pgal_value::Carrier, idx: &[usize]) -> Vec<Value> {
    idx.iter().map(|&i| c.elements()[i].clone()).collect()
}

fn rows(r: &Rel, i: usize) -> impl Iterator<Item = usize> + '_ {
    r.row(i).iter().map(|&j| j as usize)
}

/// `x₁ ≤ x₂ ≤ x₃ ≤ x₄ ⟶ D x₂ x₃ ≤ D x₁ x₄`, or with `bound` the appendix
/// shape `… ≤ x₄ ≤ η x₃ ⟶ D x₂ x₄ ≤ D x₁ x₃`.
fn chain_left(name: &str, r1: &Rel, d: &DepRel, bound: Option<&[usize]>) -> CheckReport {
    let mut incl = CaseInclusion::new(d);
    for x1 in 0..r1.left().len() {
        for x2 in rows(r1, x1) {
            for x3 in rows(r1, x2) {
                for x4 in rows(r1, x3) {
                    let (a, b) = match bound {
                        None => ((x2, x3), (x1, x4)),
                        Some(eta) => {
                            if !r1.holds_idx(x4, eta[x3]) {
                                continue;
                            }
                            ((x2, x4), (x1, x3))
                        }
                    };
                    if let Some((y, z)) = incl.missing(a, b) {
                        let mut w = vals(r1.left(), &[x1, x2, x3, x4]);
                        w.extend(vals(d.base_left(), &[y]));
                        w.extend(vals(d.base_right(), &[z]));
                        return CheckReport::fail(name, w);
                    }
                }
            }
        }
    }
    CheckReport::pass(name)
}

/// Appendix shape on the right: `ε x₂ ≤ x₁ ≤ x₂ ≤ x₃ ≤ x₄ ⟶ D x₁ x₃ ≤ D x₂ x₄`.
fn chain_right_bounded(name: &str, r1: &Rel, d: &DepRel, eps: &[usize]) -> CheckReport {
    let mut incl = CaseInclusion::new(d);
    for x1 in 0..r1.left().len() {
        for x2 in rows(r1, x1) {
            if !r1.holds_idx(eps[x2], x1) {
                continue;
            }
            for x3 in rows(r1, x2) {
                for x4 in rows(r1, x3) {
                    if let Some((y, z)) = incl.missing((x1, x3), (x2, x4)) {
                        let mut w = vals(r1.left(), &[x1, x2, x3, x4]);
                        w.extend(vals(d.base_left(), &[y]));
                        w.extend(vals(d.base_right(), &[z]));
                        return CheckReport::fail(name, w);
                    }
                }
            }
        }
    }
    CheckReport::pass(name)
}

/// Every chain `x₁ ≤L₁ x₂ ⪅L₁ x₁' ≤R₁ x₂'` in canonical order.
fn galois_chains(input: &DepFunClosureInput) -> Vec<[usize; 4]> {
    let e1 = &input.e1;
    let (l1, r1) = (e1.left(), e1.right());
    let mut out = Vec::new();
    for x1 in 0..e1.alpha().len() {
        for x2 in rows(l1, x1) {
            for x1p in 0..e1.beta().len() {
                if !(r1.in_codom_idx(x1p) && l1.holds_idx(x2, e1.r().apply_idx(x1p))) {
                    continue;
                }
                for x2p in rows(r1, x1p) {
                    out.push([x1, x2, x1p, x2p]);
                }
            }
        }
    }
    out
}

fn chain_witness(input: &DepFunClosureInput, ch: &[usize; 4]) -> Vec<Value> {
    let (a1, a2) = (input.e1.alpha(), input.e1.beta());
    vec![
        a1.elements()[ch[0]].clone(),
        a1.elements()[ch[1]].clone(),
        a2.elements()[ch[2]].clone(),
        a2.elements()[ch[3]].clone(),
    ]
}

/// `… ∧ in_field (L₂ x₁ (r₁ x₂')) y ⟶
/// R₂ (l₁ x₁) x₂' (l₂ x₁' x₁ y) (l₂ x₂' x₂ y)`.
fn m3(input: &DepFunClosureInput, chains: &[[usize; 4]]) -> CheckReport {
    let name = "mono_l2";
    let e1 = &input.e1;
    for ch in chains {
        let &[x1, x2, x1p, x2p] = ch;
        let lc = input.l2.at_idx(x1, e1.r().apply_idx(x2p));
        let rc = input.r2.at_idx(e1.l().apply_idx(x1), x2p);
        let (f, g) = (input.l2f.at_idx(x1p, x1), input.l2f.at_idx(x2p, x2));
        for y in 0..lc.left().len() {
            if lc.in_field_idx(y) && !rc.holds_idx(f.apply_idx(y), g.apply_idx(y)) {
                let mut w = chain_witness(input, ch);
                w.push(lc.left().elements()[y].clone());
                return CheckReport::fail(name, w);
            }
        }
    }
    CheckReport::pass(name)
}

/// `… ∧ in_field (R₂ (l₁ x₁) x₂') y' ⟶
/// L₂ x₁ (r₁ x₂') (r₂ x₁ x₁' y') (r₂ x₂ x₂' y')`.
fn m4(input: &DepFunClosureInput, chains: &[[usize; 4]]) -> CheckReport {
    let name = "mono_r2";
    let e1 = &input.e1;
    for ch in chains {
        let &[x1, x2, x1p, x2p] = ch;
        let lc = input.l2.at_idx(x1, e1.r().apply_idx(x2p));
        let rc = input.r2.at_idx(e1.l().apply_idx(x1), x2p);
        let (f, g) = (input.r2f.at_idx(x1, x1p), input.r2f.at_idx(x2, x2p));
        for y in 0..rc.left().len() {
            if rc.in_field_idx(y) && !lc.holds_idx(f.apply_idx(y), g.apply_idx(y)) {
                let mut w = chain_witness(input, ch);
                w.push(rc.left().elements()[y].clone());
                return CheckReport::fail(name, w);
            }
        }
    }
    CheckReport::pass(name)
}

pub(crate) fn condition_m1(input: &DepFunClosureInput, variant: MonoVariant) -> CheckReport {
    let e1 = &input.e1;
    match variant {
        MonoVariant::Main => chain_left("mono_left_rel", e1.left(), &input.l2, None),
        MonoVariant::Appendix => {
            let eta = e1.unit();
            chain_left("mono_left_rel", e1.left(), &input.l2, Some(eta.indices()))
        }
    }
}

pub(crate) fn condition_m4(input: &DepFunClosureInput) -> CheckReport {
    m4(input, &galois_chains(input))
}

/// Checks `M1`–`M4`, one sub-report each, named `mono_left_rel`,
/// `mono_right_rel`, `mono_l2` and `mono_r2`. A failing condition carries
/// its chain followed by the offending element(s).
pub fn check_mono_conditions(input: &DepFunClosureInput, variant: MonoVariant) -> CheckReport {
    let e1 = &input.e1;
    let m2 = match variant {
        MonoVariant::Main => chain_left("mono_right_rel", e1.right(), &input.r2, None),
        MonoVariant::Appendix => {
            let eps = e1.counit();
            chain_right_bounded("mono_right_rel", e1.right(), &input.r2, eps.indices())
        }
    };
    let chains = galois_chains(input);
    CheckReport::all(
        format!("mono_conditions_{}", variant.name()),
        vec![condition_m1(input, variant), m2, m3(input, &chains), m4(input, &chains)],
    )
}
