use pgal_value::{Result, Value};

use crate::{CheckReport, Pred, Rel};

pub fn rel_inverse(r: &Rel) -> Rel {
    Rel::from_index_pairs(
        r.right().clone(),
        r.left().clone(),
        r.index_pairs().map(|(i, j)| (j, i)),
    )
}

/// `(R ∘ S) x y` iff some `z` has `R x z` and `S z y`.
pub fn rel_compose(r: &Rel, s: &Rel) -> Result<Rel> {
    r.right().expect_same(s.left(), "rel_compose")?;
    let mut pairs = Vec::new();
    for i in 0..r.left().len() {
        let mut seen = vec![false; s.right().len()];
        for &z in r.row(i) {
            for &j in s.row(z as usize) {
                seen[j as usize] = true;
            }
        }
        pairs.extend(seen.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| (i, j)));
    }
    Ok(Rel::from_index_pairs(
        r.left().clone(),
        s.right().clone(),
        pairs,
    ))
}

/// `R ≤ S`: every pair of `R` is a pair of `S`. The witness is the smallest
/// pair of `R` missing from `S`.
pub fn rel_finer(r: &Rel, s: &Rel) -> Result<CheckReport> {
    r.expect_same_carriers(s, "rel_finer")?;
    let bad = r.index_pairs().find(|&(i, j)| !s.holds_idx(i, j));
    Ok(CheckReport::from_witness(
        "finer",
        bad.map(|(i, j)| pair(r, i, j)),
    ))
}

/// Pair-set equality; the witness is the smallest pair in the symmetric
/// difference.
pub fn rel_equal(property: &str, r: &Rel, s: &Rel) -> Result<CheckReport> {
    r.expect_same_carriers(s, property)?;
    let mut bad = None;
    'outer: for i in 0..r.left().len() {
        let (a, b) = (r.row(i), s.row(i));
        if a != b {
            for j in 0..r.right().len() {
                if r.holds_idx(i, j) != s.holds_idx(i, j) {
                    bad = Some(pair(r, i, j));
                    break 'outer;
                }
            }
        }
    }
    Ok(CheckReport::from_witness(property, bad))
}

fn pair(r: &Rel, i: usize, j: usize) -> Vec<Value> {
    vec![r.left().elements()[i].clone(), r.right().elements()[j].clone()]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    InDom,
    InCodom,
    InField,
}

pub fn rel_membership(kind: Membership, r: &Rel, x: &Value) -> Result<bool> {
    match kind {
        Membership::InDom => Ok(r.in_dom_idx(r.left().require(x)?)),
        Membership::InCodom => Ok(r.in_codom_idx(r.right().require(x)?)),
        Membership::InField => {
            r.expect_homogeneous("in_field")?;
            Ok(r.in_field_idx(r.left().require(x)?))
        }
    }
}

/// `x =_S y` iff `x ∈ S` and `x = y`.
pub fn restricted_eq(s: &Pred) -> Rel {
    let c = s.carrier().clone();
    Rel::from_index_pairs(
        c.clone(),
        c.clone(),
        (0..c.len()).filter(|&i| s.contains_idx(i)).map(|i| (i, i)),
    )
}

/// `rel_if B S x y` is `B ⟶ S x y`.
pub fn rel_if(b: bool, s: &Rel) -> Rel {
    if b {
        s.clone()
    } else {
        Rel::full(s.left().clone(), s.right().clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pgal_value::Carrier;
    use std::sync::Arc;

    fn int5() -> Arc<Carrier> {
        Arc::new(Carrier::ints("Int5", -2, 2))
    }

    fn zpos() -> Rel {
        let c = int5();
        restricted_eq(&Pred::from_fn(c, |v| v.as_int().unwrap() >= 0))
    }

    fn small(pairs: &[(i64, i64)]) -> Rel {
        let c = Arc::new(Carrier::ints("N3", 0, 2));
        Rel::new(
            c.clone(),
            c,
            pairs.iter().map(|&(a, b)| (Value::Int(a), Value::Int(b))),
        )
        .unwrap()
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(rel_inverse(&small(&[(0, 1), (1, 1)])), small(&[(1, 0), (1, 1)]));
        assert_eq!(rel_inverse(&small(&[])), small(&[]));
        assert_eq!(rel_inverse(&rel_inverse(&zpos())), zpos());
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            rel_compose(&small(&[(0, 1)]), &small(&[(1, 0)])).unwrap(),
            small(&[(0, 0)])
        );
        assert_eq!(rel_compose(&small(&[(0, 1)]), &small(&[])).unwrap(), small(&[]));
        assert_eq!(rel_compose(&zpos(), &zpos()).unwrap(), zpos());
    }

    #[test]
    fn compose_rejects_mismatched_carriers() {
        assert!(rel_compose(&zpos(), &small(&[])).is_err());
    }

    #[test]
    fn finer_examples() {
        let eq = Rel::equality(int5());
        assert!(rel_finer(&Rel::empty(int5(), int5()), &eq).unwrap().verdict());
        assert!(rel_finer(&zpos(), &eq).unwrap().verdict());
        let r = rel_finer(&eq, &zpos()).unwrap();
        assert!(!r.verdict());
        // -1 fails as well, but -2 is canonically smaller.
        assert_eq!(r.witness, Some(vec![Value::Int(-2), Value::Int(-2)]));
    }

    #[test]
    fn membership_examples() {
        assert!(!rel_membership(Membership::InDom, &zpos(), &Value::Int(-1)).unwrap());
        let r = small(&[(0, 1)]);
        assert!(rel_membership(Membership::InCodom, &r, &Value::Int(1)).unwrap());
        assert!(rel_membership(Membership::InField, &r, &Value::Int(0)).unwrap());
        assert!(rel_membership(Membership::InDom, &r, &Value::Int(7)).is_err());
    }

    #[test]
    fn restricted_eq_examples() {
        assert_eq!(
            zpos().pairs().map(|(x, _)| x.as_int().unwrap()).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        assert!(restricted_eq(&Pred::new(int5(), []).unwrap()).is_empty());
        assert_eq!(restricted_eq(&Pred::full(int5())), Rel::equality(int5()));
    }

    #[test]
    fn rel_if_examples() {
        assert_eq!(rel_if(true, &zpos()), zpos());
        let b2 = Arc::new(Carrier::ints("B2", 0, 1));
        assert_eq!(rel_if(false, &Rel::empty(b2.clone(), b2)).len(), 4);
        assert!(rel_finer(&zpos(), &rel_if(false, &zpos())).unwrap().verdict());
    }

    #[test]
    fn equality_witness_is_smallest_difference() {
        let r = rel_equal("eq", &small(&[(0, 2), (1, 1)]), &small(&[(1, 1), (2, 0)])).unwrap();
        assert_eq!(r.witness, Some(vec![Value::Int(0), Value::Int(2)]));
    }
}
