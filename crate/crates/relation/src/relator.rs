use std::sync::Arc;

use pgal_value::{Carrier, Error, FunTable, Result};

use crate::{CheckReport, DepRel, Rel};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelatorKind {
    /// `∀x y. R₁ x y ⟶ S x y (f x) (g y)`.
    Plain,
    /// Plain with `g := f`; `g` is ignored.
    MonoFun,
    /// Plain together with monotonicity of both `f` and `g`.
    MonoRelator,
}

impl RelatorKind {
    pub fn name(self) -> &'static str {
        match self {
            RelatorKind::Plain => "relator",
            RelatorKind::MonoFun => "mono_fun",
            RelatorKind::MonoRelator => "mono_relator",
        }
    }
}

fn check_side(r1: &Rel, s: &DepRel, dom_l: &Carrier, cod_l: &Carrier, dom_r: &Carrier, cod_r: &Carrier) -> Result<()> {
    let ctx = "function relator";
    r1.left().expect_same(dom_l, ctx)?;
    r1.right().expect_same(dom_r, ctx)?;
    s.param1().expect_same(r1.left(), ctx)?;
    s.param2().expect_same(r1.right(), ctx)?;
    s.base_left().expect_same(cod_l, ctx)?;
    s.base_right().expect_same(cod_r, ctx)
}

/// Smallest `(i, j)` with `R₁ i j` and not `S i j (f i) (g j)`, over index
/// tables of `f` and `g`.
pub fn relator_violation(r1: &Rel, s: &DepRel, f: &[usize], g: &[usize]) -> Option<(usize, usize)> {
    r1.index_pairs()
        .find(|&(i, j)| !s.at_idx(i, j).holds_idx(f[i], g[j]))
}

fn plain_report(name: &str, r1: &Rel, s: &DepRel, f: &FunTable, g: &FunTable) -> CheckReport {
    let bad = relator_violation(r1, s, f.indices(), g.indices());
    CheckReport::from_witness(
        name,
        bad.map(|(i, j)| {
            vec![
                r1.left().elements()[i].clone(),
                r1.right().elements()[j].clone(),
            ]
        }),
    )
}

/// Witness on failure is the smallest related input pair `(x, y)`.
pub fn dep_fun_relator(
    kind: RelatorKind,
    r1: &Rel,
    s: &DepRel,
    f: &FunTable,
    g: &FunTable,
) -> Result<CheckReport> {
    match kind {
        RelatorKind::Plain => {
            check_side(r1, s, f.dom(), f.cod(), g.dom(), g.cod())?;
            Ok(plain_report(kind.name(), r1, s, f, g))
        }
        RelatorKind::MonoFun => {
            check_side(r1, s, f.dom(), f.cod(), f.dom(), f.cod())?;
            Ok(plain_report(kind.name(), r1, s, f, f))
        }
        RelatorKind::MonoRelator => {
            check_side(r1, s, f.dom(), f.cod(), g.dom(), g.cod())?;
            check_side(r1, s, f.dom(), f.cod(), f.dom(), f.cod())?;
            Ok(CheckReport::all(
                kind.name(),
                vec![
                    plain_report("relator", r1, s, f, g),
                    plain_report("mono_left", r1, s, f, f),
                    plain_report("mono_right", r1, s, g, g),
                ],
            ))
        }
    }
}

fn space_carrier(space: &[FunTable], dom: &Carrier, cod: &Carrier) -> Result<(Arc<Carrier>, Vec<usize>)> {
    for t in space {
        t.dom().expect_same(dom, "function space")?;
        t.cod().expect_same(cod, "function space")?;
    }
    let c = Arc::new(Carrier::new(
        format!("({}->{})", dom.name(), cod.name()),
        space.iter().map(FunTable::to_value),
    ));
    if c.len() != space.len() {
        return Err(Error::Wiring("function space lists a table twice".into()));
    }
    let pos = space
        .iter()
        .map(|t| c.index_of(&t.to_value()).expect("just inserted"))
        .collect();
    Ok((c, pos))
}

/// The relator as a `Rel` between function-space carriers whose elements are
/// the encoded tables.
pub fn materialize_relator(
    kind: RelatorKind,
    r1: &Rel,
    s: &DepRel,
    space_l: &[FunTable],
    space_r: &[FunTable],
    cap: usize,
) -> Result<Rel> {
    let count = space_l.len() as u128 * space_r.len() as u128;
    if count > cap as u128 {
        return Err(Error::CapExceeded {
            what: "relator pairs".into(),
            count: count.to_string(),
            cap,
        });
    }
    check_side(r1, s, r1.left(), s.base_left(), r1.right(), s.base_right())?;
    let (cl, pos_l) = space_carrier(space_l, r1.left(), s.base_left())?;
    let (cr, pos_r) = space_carrier(space_r, r1.right(), s.base_right())?;
    let mono = |t: &FunTable| relator_violation(r1, s, t.indices(), t.indices()).is_none();
    if kind != RelatorKind::Plain {
        check_side(r1, s, r1.left(), s.base_left(), r1.left(), s.base_left())?;
    }
    let mono_l: Vec<bool> = match kind {
        RelatorKind::Plain => vec![true; space_l.len()],
        _ => space_l.iter().map(mono).collect(),
    };
    let mono_r: Vec<bool> = match kind {
        RelatorKind::MonoRelator => space_r.iter().map(mono).collect(),
        _ => vec![true; space_r.len()],
    };
    let mut pairs = Vec::new();
    for (a, f) in space_l.iter().enumerate() {
        if !mono_l[a] {
            continue;
        }
        for (b, g) in space_r.iter().enumerate() {
            let ok = mono_r[b]
                && (kind == RelatorKind::MonoFun
                    || relator_violation(r1, s, f.indices(), g.indices()).is_none());
            if ok {
                pairs.push((pos_l[a], pos_r[b]));
            }
        }
    }
    Ok(Rel::from_index_pairs(cl, cr, pairs))
}

/// Decodes the tables of a function-space carrier built by
/// [`materialize_relator`] or `fun_space`.
pub fn decode_space(space: &Carrier, dom: &Arc<Carrier>, cod: &Arc<Carrier>) -> Result<Vec<FunTable>> {
    space
        .elements()
        .iter()
        .map(|v| FunTable::from_value(dom.clone(), cod.clone(), v))
        .collect()
}
