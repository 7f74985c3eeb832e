use pgal_galois::{galois_relator, partial_quotient_check, induced_left_rel, PartialQuotient};
use pgal_relation::{rel_compose, rel_equal, rel_inverse, CheckReport, Rel};
use pgal_value::Result;

use crate::{build_composition, commutation_check, CompositionInput};

/// For partial quotients `Q1 = (T₁, Abs₁, Rep₁)` and `Q2` over a common
/// middle carrier:
///
/// - `T₁⁻¹ = Galois (=) ≈₁ Abs₁`;
/// - `T₁ ∘ ≈₂ ∘ T₁⁻¹ = Galois ≈₁ (=) Rep₁ ∘ ≈₂ ∘ Galois (=) ≈₁ Abs₁`;
/// - commutation of the middle relations `(=)` and `≈₂` holds;
/// - the left relation of the composition of the two records is
///   `T₁ ∘ ≈₂ ∘ T₁⁻¹`.
pub fn lifting_comparison_check(q1: &PartialQuotient, q2: &PartialQuotient) -> Result<CheckReport> {
    q1.t().right().expect_same(q2.t().left(), "lifting comparison")?;
    let hyps = vec![
        partial_quotient_check(q1).renamed("quotient_1"),
        partial_quotient_check(q2).renamed("quotient_2"),
    ];
    let (e1, e2) = (q1.as_record(), q2.as_record());
    let approx1 = induced_left_rel(q1);
    let approx2 = induced_left_rel(q2);
    let eq_mid = Rel::equality(q1.t().right().clone());
    let t1_inv = rel_inverse(q1.t());
    let gal_inv = galois_relator(&eq_mid, &approx1, q1.abs())?;
    let gal_t1 = galois_relator(&approx1, &eq_mid, q1.rep())?;
    let lifting = rel_compose(&rel_compose(q1.t(), &approx2)?, &t1_inv)?;
    let ours = rel_compose(&rel_compose(&gal_t1, &approx2)?, &gal_inv)?;
    let built = build_composition(&CompositionInput::new(e1, e2)?)?;
    let concl = CheckReport::all(
        "lifting_claims",
        vec![
            rel_equal("inverse_is_galois", &t1_inv, &gal_inv)?,
            rel_equal("chain_is_galois_chain", &lifting, &ours)?,
            commutation_check(&eq_mid, &approx2)?.renamed("middle_commutes"),
            rel_equal("composition_left_is_chain", built.left(), &lifting)?,
        ],
    );
    Ok(CheckReport::theorem("lifting_comparison", hyps, concl))
}
