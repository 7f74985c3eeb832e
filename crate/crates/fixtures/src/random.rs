//! Seeded random instances. All generators are deterministic given the seed.

use std::sync::Arc;

use pgal_galois::EquivalenceRecord;
use pgal_relation::Rel;
use pgal_value::{Carrier, FunTable};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SweepRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SweepRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integers `0..n` under the given name.
pub fn small_carrier(name: &str, n: usize) -> Arc<Carrier> {
    Arc::new(Carrier::ints(name, 0, n as i64 - 1))
}

pub fn random_rel(rng: &mut impl Rng, l: &Arc<Carrier>, r: &Arc<Carrier>, density: f64) -> Rel {
    Rel::from_index_fn(l.clone(), r.clone(), |_, _| rng.gen_bool(density))
}

pub fn random_field(rng: &mut impl Rng, c: &Carrier) -> Vec<bool> {
    (0..c.len()).map(|_| rng.gen_bool(0.8)).collect()
}

/// Reflexive-transitive closure of a random relation on a random field.
pub fn random_preorder(rng: &mut impl Rng, c: &Arc<Carrier>) -> Rel {
    let n = c.len();
    let field = random_field(rng, c);
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = field[i] && field[j] && (i == j || rng.gen_bool(0.3));
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if m[i][k] && m[k][j] {
                    m[i][j] = true;
                }
            }
        }
    }
    Rel::from_index_fn(c.clone(), c.clone(), |i, j| m[i][j])
}

/// A random partial partition; elements outside every block are outside
/// the field.
pub fn random_partition(rng: &mut impl Rng, c: &Carrier, blocks: usize) -> Vec<Option<usize>> {
    (0..c.len())
        .map(|_| {
            if blocks == 0 || rng.gen_bool(0.15) {
                None
            } else {
                Some(rng.gen_range(0..blocks))
            }
        })
        .collect()
}

pub fn per_from_partition(c: &Arc<Carrier>, part: &[Option<usize>]) -> Rel {
    Rel::from_index_fn(c.clone(), c.clone(), |i, j| {
        part[i].is_some() && part[i] == part[j]
    })
}

pub fn random_per(rng: &mut impl Rng, c: &Arc<Carrier>) -> Rel {
    let blocks = rng.gen_range(1..=c.len().max(1));
    let part = random_partition(rng, c, blocks);
    per_from_partition(c, &part)
}

pub fn random_fun(rng: &mut impl Rng, dom: &Arc<Carrier>, cod: &Arc<Carrier>) -> FunTable {
    let idx = (0..dom.len()).map(|_| rng.gen_range(0..cod.len())).collect();
    FunTable::from_indices(dom.clone(), cod.clone(), idx).expect("in range")
}

/// A PER Galois equivalence built from matching partial partitions: block
/// `k` of α corresponds to block `k` of β and the maps respect blocks.
pub fn random_per_equiv(rng: &mut impl Rng, alpha: &Arc<Carrier>, beta: &Arc<Carrier>) -> EquivalenceRecord {
    let blocks = rng.gen_range(1..=alpha.len().min(beta.len()));
    let mut pa = random_partition(rng, alpha, blocks);
    let mut pb = random_partition(rng, beta, blocks);
    // Keep every block inhabited on both sides.
    for k in 0..blocks {
        for p in [&mut pa, &mut pb] {
            if !p.contains(&Some(k)) {
                let free: Vec<usize> = (0..p.len())
                    .filter(|&i| p[i].map_or(true, |b| p.iter().filter(|&&q| q == Some(b)).count() > 1))
                    .collect();
                let i = *free.choose(rng).expect("enough elements");
                p[i] = Some(k);
            }
        }
    }
    let pick = |rng: &mut dyn rand::RngCore, part: &[Option<usize>], block: Option<usize>| -> usize {
        let cands: Vec<usize> = match block {
            Some(b) => (0..part.len()).filter(|&j| part[j] == Some(b)).collect(),
            None => (0..part.len()).collect(),
        };
        cands[rng.gen_range(0..cands.len())]
    };
    let l_idx = (0..alpha.len()).map(|i| pick(rng, &pb, pa[i])).collect();
    let r_idx = (0..beta.len()).map(|j| pick(rng, &pa, pb[j])).collect();
    EquivalenceRecord::new(
        per_from_partition(alpha, &pa),
        per_from_partition(beta, &pb),
        FunTable::from_indices(alpha.clone(), beta.clone(), l_idx).expect("in range"),
        FunTable::from_indices(beta.clone(), alpha.clone(), r_idx).expect("in range"),
    )
    .expect("wiring")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavour {
    /// Arbitrary relations.
    Any,
    /// Random preorders on random fields.
    Preorder,
    /// Random PERs.
    Per,
    /// A constructed PER Galois equivalence.
    PerEquiv,
}

pub fn random_record(rng: &mut impl Rng, alpha: &Arc<Carrier>, beta: &Arc<Carrier>, flavour: Flavour) -> EquivalenceRecord {
    let (left, right) = match flavour {
        Flavour::Any => (random_rel(rng, alpha, alpha, 0.5), random_rel(rng, beta, beta, 0.5)),
        Flavour::Preorder => (random_preorder(rng, alpha), random_preorder(rng, beta)),
        Flavour::Per => (random_per(rng, alpha), random_per(rng, beta)),
        Flavour::PerEquiv => return random_per_equiv(rng, alpha, beta),
    };
    let l = random_fun(rng, alpha, beta);
    let r = random_fun(rng, beta, alpha);
    EquivalenceRecord::new(left, right, l, r).expect("wiring")
}

/// Flips one pair of a relation or changes one entry of a map.
pub fn mutate_record(rng: &mut impl Rng, e: &EquivalenceRecord) -> EquivalenceRecord {
    let flip = |rng: &mut dyn rand::RngCore, r: &Rel| {
        let n = r.left().len();
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        Rel::from_index_fn(r.left().clone(), r.right().clone(), |i, j| {
            r.holds_idx(i, j) != (i == a && j == b)
        })
    };
    let bump = |rng: &mut dyn rand::RngCore, f: &FunTable| {
        let mut idx = f.indices().to_vec();
        if !idx.is_empty() {
            let k = rng.gen_range(0..idx.len());
            idx[k] = rng.gen_range(0..f.cod().len());
        }
        FunTable::from_indices(f.dom().clone(), f.cod().clone(), idx).expect("in range")
    };
    let (mut left, mut right, mut l, mut r) =
        (e.left().clone(), e.right().clone(), e.l().clone(), e.r().clone());
    match rng.gen_range(0..4) {
        0 => left = flip(rng, &left),
        1 => right = flip(rng, &right),
        2 => l = bump(rng, &l),
        _ => r = bump(rng, &r),
    }
    EquivalenceRecord::new(left, right, l, r).expect("wiring")
}

/// One of the generators above, chosen at random, with an occasional
/// mutation so that near-misses are covered.
pub fn any_record(rng: &mut impl Rng, alpha: &Arc<Carrier>, beta: &Arc<Carrier>) -> EquivalenceRecord {
    let flavour = [Flavour::Any, Flavour::Preorder, Flavour::Per, Flavour::PerEquiv, Flavour::PerEquiv]
        .choose(rng)
        .copied()
        .expect("nonempty");
    let e = random_record(rng, alpha, beta, flavour);
    if rng.gen_bool(0.25) {
        mutate_record(rng, &e)
    } else {
        e
    }
}
