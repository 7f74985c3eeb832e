use pgal_galois::{galois_class_check, galois_relator, EquivalenceRecord, GaloisClass};
use pgal_relation::{
    dep_fun_relator, order_property, order_property_on_field, rel_compose, rel_equal, CheckReport,
    DepRel, OrderKind, Pred, Rel, RelatorKind,
};
use pgal_value::{Error, Result};

#[derive(Clone, Debug)]
pub struct CompositionInput {
    pub e1: EquivalenceRecord,
    pub e2: EquivalenceRecord,
}

impl CompositionInput {
    pub fn new(e1: EquivalenceRecord, e2: EquivalenceRecord) -> Result<Self> {
        e1.beta().expect_same(e2.alpha(), "composition")?;
        Ok(CompositionInput { e1, e2 })
    }

    /// `⪅R₁ := Galois ≤R₁ ≤L₁ l₁`, on `β × α`.
    pub fn gal_r1(&self) -> Rel {
        let e = &self.e1;
        galois_relator(e.right(), e.left(), e.l()).expect("record wiring")
    }

    /// `⪅R₂ := Galois ≤R₂ ≤L₂ l₂`, on `γ × β`.
    pub fn gal_r2(&self) -> Rel {
        let e = &self.e2;
        galois_relator(e.right(), e.left(), e.l()).expect("record wiring")
    }
}

/// `(L, R, l₂ ∘ l₁, r₁ ∘ r₂)` with the chain relations above.
pub fn build_composition(input: &CompositionInput) -> Result<EquivalenceRecord> {
    let (e1, e2) = (&input.e1, &input.e2);
    let left = rel_compose(&rel_compose(&e1.galois_rel(), e2.left())?, &input.gal_r1())?;
    let right = rel_compose(&rel_compose(&input.gal_r2(), e1.right())?, &e2.galois_rel())?;
    EquivalenceRecord::new(left, right, e1.l().then(e2.l())?, e2.r().then(e1.r())?)
}

/// `(≤R₁ ∘ ≤L₂) = (≤L₂ ∘ ≤R₁)`; the witness is the smallest pair in exactly
/// one of them.
pub fn commutation_check(r1: &Rel, l2: &Rel) -> Result<CheckReport> {
    r1.expect_same_carriers(l2, "commutation")?;
    r1.expect_homogeneous("commutation")?;
    rel_equal("commutation", &rel_compose(r1, l2)?, &rel_compose(l2, r1)?)
}

fn commutes(input: &CompositionInput) -> CheckReport {
    commutation_check(input.e1.right(), input.e2.left()).expect("wiring")
}

fn component(i: usize, class: GaloisClass, e: &EquivalenceRecord) -> CheckReport {
    galois_class_check(class, e).renamed(format!("component_{i}_{}", class.name()))
}

fn field_order(name: &str, kind: OrderKind, r: &Rel) -> CheckReport {
    order_property_on_field(kind, r).expect("homogeneous").renamed(name)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompStar {
    PreEquiv,
    PerEquiv,
    /// Galois equivalences with preorders on the middle fields give a
    /// connection.
    Connection,
}

impl CompStar {
    pub fn name(self) -> &'static str {
        match self {
            CompStar::PreEquiv => "pre_equiv",
            CompStar::PerEquiv => "per_equiv",
            CompStar::Connection => "connection",
        }
    }
}

impl std::str::FromStr for CompStar {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pre_equiv" => Ok(CompStar::PreEquiv),
            "per_equiv" => Ok(CompStar::PerEquiv),
            "connection" | "galois_connection" => Ok(CompStar::Connection),
            _ => Err(format!("unknown composition class {s:?}")),
        }
    }
}

/// Closure of composition, gated on the component classes and commutation.
pub fn verify_comp_theorem(input: &CompositionInput, star: CompStar) -> Result<CheckReport> {
    let (e1, e2) = (&input.e1, &input.e2);
    let (hyps, target) = match star {
        CompStar::PreEquiv | CompStar::PerEquiv => {
            let class = if star == CompStar::PreEquiv {
                GaloisClass::PreEquiv
            } else {
                GaloisClass::PerEquiv
            };
            (vec![component(1, class, e1), component(2, class, e2), commutes(input)], class)
        }
        CompStar::Connection => (
            vec![
                component(1, GaloisClass::GaloisEquiv, e1),
                component(2, GaloisClass::GaloisEquiv, e2),
                field_order("middle_right_preorder_on", OrderKind::PreorderOn, e1.right()),
                field_order("middle_left_preorder_on", OrderKind::PreorderOn, e2.left()),
                commutes(input),
            ],
            GaloisClass::Connection,
        ),
    };
    let built = build_composition(input)?;
    let concl = galois_class_check(target, &built).renamed(format!("composition_is_{}", target.name()));
    Ok(CheckReport::theorem(format!("composition_{}", star.name()), hyps, concl))
}

/// With `≤R₁ = ≤L₂`, `(≤L₁ ⋆ ≤R₂) (l₂ ∘ l₁) (r₁ ∘ r₂)` on the original outer
/// relations.
pub fn verify_comp_coincide(input: &CompositionInput, star: GaloisClass) -> Result<CheckReport> {
    if matches!(star, GaloisClass::HalfLeft | GaloisClass::HalfRight | GaloisClass::GaloisProp) {
        return Err(Error::Wiring(format!(
            "coinciding closure is stated for connections and equivalences, not {}",
            star.name()
        )));
    }
    let (e1, e2) = (&input.e1, &input.e2);
    let hyps = vec![
        component(1, star, e1),
        component(2, star, e2),
        rel_equal("middle_relations_equal", e1.right(), e2.left())?,
    ];
    let direct = EquivalenceRecord::new(
        e1.left().clone(),
        e2.right().clone(),
        e1.l().then(e2.l())?,
        e2.r().then(e1.r())?,
    )?;
    let concl = galois_class_check(star, &direct).renamed(format!("outer_is_{}", star.name()));
    Ok(CheckReport::theorem(format!("composition_coincide_{}", star.name()), hyps, concl))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimilarityVariant {
    /// Both components preorder equivalences.
    PreEquiv,
    /// The weaker connection-style hypotheses.
    Connection,
}

fn mono(name: &str, from: &Rel, to: &Rel, f: &pgal_value::FunTable) -> CheckReport {
    let s = DepRel::constant(from.left().clone(), from.right().clone(), to.clone());
    dep_fun_relator(RelatorKind::MonoFun, from, &s, f, f).expect("wiring").renamed(name)
}

/// `⪅L = ⪅L₁ ∘ ⪅L₂`, gated on the hypotheses of the chosen variant.
pub fn comp_similarity_check(input: &CompositionInput, variant: SimilarityVariant) -> Result<CheckReport> {
    let (e1, e2) = (&input.e1, &input.e2);
    let hyps = match variant {
        SimilarityVariant::PreEquiv => vec![
            component(1, GaloisClass::PreEquiv, e1),
            component(2, GaloisClass::PreEquiv, e2),
            commutes(input),
        ],
        SimilarityVariant::Connection => vec![
            mono("mono_r1", e1.right(), e1.left(), e1.r()),
            component(1, GaloisClass::GaloisProp, e1),
            galois_class_check(GaloisClass::HalfLeft, &e1.flipped()).renamed("reverse_half_galois_left_1"),
            field_order("middle_right_preorder_on", OrderKind::PreorderOn, e1.right()),
            mono("mono_l2", e2.left(), e2.right(), e2.l()),
            galois_class_check(GaloisClass::HalfLeft, &e2.flipped()).renamed("reverse_half_galois_left_2"),
            order_property(OrderKind::ReflexiveOn, &Pred::in_dom(e2.left()), e2.left())?
                .renamed("middle_left_reflexive_on_dom"),
            commutes(input),
        ],
    };
    let built = build_composition(input)?;
    let chained = rel_compose(&e1.galois_rel(), &e2.galois_rel())?;
    let concl = rel_equal("galois_rel_is_composite", &built.galois_rel(), &chained)?;
    let name = match variant {
        SimilarityVariant::PreEquiv => "composition_similarity",
        SimilarityVariant::Connection => "composition_similarity_connection",
    };
    Ok(CheckReport::theorem(name, hyps, concl))
}
