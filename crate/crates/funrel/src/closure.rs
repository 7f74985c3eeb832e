use pgal_galois::EquivalenceRecord;
use pgal_relation::{
    decode_space, dep_fun_map, materialize_relator, DepFunTable, DepRel, RelatorKind,
};
use pgal_value::{enumerate_fun_tables, FunTable, Result};

/// Components of `L := [x₁ x₂ ∷ ≤L₁] ⇛⊕ ≤L₂ x₁ x₂` and its mirror `R`.
///
/// With `E1 = (L₁, R₁, l₁, r₁)` on `α₁`, `α₂`: `l2` (`L₂`) is indexed by
/// `α₁ × α₁` over `β₁`, `r2` (`R₂`) by `α₂ × α₂` over `β₂`, `l2f` (`l₂`) by
/// `α₂ × α₁` with tables `β₁ → β₂`, and `r2f` (`r₂`) by `α₁ × α₂` with tables
/// `β₂ → β₁`.
#[derive(Clone, Debug)]
pub struct DepFunClosureInput {
    pub e1: EquivalenceRecord,
    pub l2: DepRel,
    pub r2: DepRel,
    pub l2f: DepFunTable,
    pub r2f: DepFunTable,
    pub cap: usize,
}

impl DepFunClosureInput {
    pub fn new(
        e1: EquivalenceRecord,
        l2: DepRel,
        r2: DepRel,
        l2f: DepFunTable,
        r2f: DepFunTable,
        cap: usize,
    ) -> Result<Self> {
        let ctx = "dependent function closure";
        let (a1, a2) = (e1.alpha(), e1.beta());
        l2.param1().expect_same(a1, ctx)?;
        l2.param2().expect_same(a1, ctx)?;
        r2.param1().expect_same(a2, ctx)?;
        r2.param2().expect_same(a2, ctx)?;
        l2.base_left().expect_same(l2.base_right(), ctx)?;
        r2.base_left().expect_same(r2.base_right(), ctx)?;
        l2f.param1().expect_same(a2, ctx)?;
        l2f.param2().expect_same(a1, ctx)?;
        r2f.param1().expect_same(a1, ctx)?;
        r2f.param2().expect_same(a2, ctx)?;
        l2f.dom().expect_same(l2.base_left(), ctx)?;
        l2f.cod().expect_same(r2.base_left(), ctx)?;
        r2f.dom().expect_same(r2.base_left(), ctx)?;
        r2f.cod().expect_same(l2.base_left(), ctx)?;
        Ok(DepFunClosureInput {
            e1,
            l2,
            r2,
            l2f,
            r2f,
            cap,
        })
    }

    /// Everything constant in the parameters.
    pub fn non_dependent(e1: EquivalenceRecord, e2: &EquivalenceRecord, cap: usize) -> Result<Self> {
        let (a1, a2) = (e1.alpha().clone(), e1.beta().clone());
        DepFunClosureInput::new(
            e1,
            DepRel::constant(a1.clone(), a1.clone(), e2.left().clone()),
            DepRel::constant(a2.clone(), a2.clone(), e2.right().clone()),
            DepFunTable::constant(a2.clone(), a1.clone(), e2.l().clone()),
            DepFunTable::constant(a1, a2, e2.r().clone()),
            cap,
        )
    }

    /// `l f x' = l₂ x' (r₁ x') (f (r₁ x'))`.
    pub fn l_map(&self, f: &FunTable) -> Result<FunTable> {
        dep_fun_map(self.e1.r(), &self.l2f, f)
    }

    /// `r g x = r₂ x (l₁ x) (g (l₁ x))`.
    pub fn r_map(&self, g: &FunTable) -> Result<FunTable> {
        dep_fun_map(self.e1.l(), &self.r2f, g)
    }

    /// The case record at `x ⪅L₁ x'`:
    /// `(L₂ x (r₁ x'), R₂ (l₁ x) x', l₂ x' x, r₂ x x')`, by indices.
    pub fn pair_record(&self, x: usize, xp: usize) -> EquivalenceRecord {
        let e1 = &self.e1;
        EquivalenceRecord::new(
            self.l2.at_idx(x, e1.r().apply_idx(xp)).clone(),
            self.r2.at_idx(e1.l().apply_idx(x), xp).clone(),
            self.l2f.at_idx(xp, x).clone(),
            self.r2f.at_idx(x, xp).clone(),
        )
        .expect("input wiring")
    }
}

pub struct DepFunClosureOutput {
    /// `(L, R, l, r)` over the function-space carriers.
    pub record: EquivalenceRecord,
    /// Tables of `α₁ → β₁`, in carrier order.
    pub space_l: Vec<FunTable>,
    /// Tables of `α₂ → β₂`, in carrier order.
    pub space_r: Vec<FunTable>,
}

/// Materialises the monotone dependent relators and the transport maps.
pub fn build_dep_fun_closure(input: &DepFunClosureInput) -> Result<DepFunClosureOutput> {
    let e1 = &input.e1;
    let (b1, b2) = (input.l2.base_left(), input.r2.base_left());
    let tables_l = enumerate_fun_tables(e1.alpha(), b1, input.cap)?;
    let tables_r = enumerate_fun_tables(e1.beta(), b2, input.cap)?;
    let kind = RelatorKind::MonoRelator;
    let big_l = materialize_relator(kind, e1.left(), &input.l2, &tables_l, &tables_l, input.cap)?;
    let big_r = materialize_relator(kind, e1.right(), &input.r2, &tables_r, &tables_r, input.cap)?;
    let space_l = decode_space(big_l.left(), e1.alpha(), b1)?;
    let space_r = decode_space(big_r.left(), e1.beta(), b2)?;
    let l_idx = space_l
        .iter()
        .map(|f| Ok(big_r.left().require(&input.l_map(f)?.to_value())?))
        .collect::<Result<Vec<_>>>()?;
    let r_idx = space_r
        .iter()
        .map(|g| Ok(big_l.left().require(&input.r_map(g)?.to_value())?))
        .collect::<Result<Vec<_>>>()?;
    let l = FunTable::from_indices(big_l.left().clone(), big_r.left().clone(), l_idx)?;
    let r = FunTable::from_indices(big_r.left().clone(), big_l.left().clone(), r_idx)?;
    Ok(DepFunClosureOutput {
        record: EquivalenceRecord::new(big_l, big_r, l, r)?,
        space_l,
        space_r,
    })
}
