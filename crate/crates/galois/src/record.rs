use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use pgal_relation::Rel;
use pgal_value::{Carrier, Error, FunTable, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaloisClass {
    HalfLeft,
    HalfRight,
    GaloisProp,
    Connection,
    GaloisEquiv,
    OrderEquiv,
    PreEquiv,
    PerEquiv,
}

impl GaloisClass {
    pub const ALL: [GaloisClass; 8] = [
        GaloisClass::HalfLeft,
        GaloisClass::HalfRight,
        GaloisClass::GaloisProp,
        GaloisClass::Connection,
        GaloisClass::GaloisEquiv,
        GaloisClass::OrderEquiv,
        GaloisClass::PreEquiv,
        GaloisClass::PerEquiv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GaloisClass::HalfLeft => "half_galois_left",
            GaloisClass::HalfRight => "half_galois_right",
            GaloisClass::GaloisProp => "galois_prop",
            GaloisClass::Connection => "galois_connection",
            GaloisClass::GaloisEquiv => "galois_equiv",
            GaloisClass::OrderEquiv => "order_equiv",
            GaloisClass::PreEquiv => "pre_equiv",
            GaloisClass::PerEquiv => "per_equiv",
        }
    }
}

impl fmt::Display for GaloisClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GaloisClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "half_left" | "half_galois_left" => GaloisClass::HalfLeft,
            "half_right" | "half_galois_right" => GaloisClass::HalfRight,
            "galois_prop" => GaloisClass::GaloisProp,
            "connection" | "galois_connection" => GaloisClass::Connection,
            "galois_equiv" => GaloisClass::GaloisEquiv,
            "order_equiv" => GaloisClass::OrderEquiv,
            "pre_equiv" => GaloisClass::PreEquiv,
            "per_equiv" => GaloisClass::PerEquiv,
            _ => return Err(Error::Wiring(format!("unknown class {s:?}"))),
        })
    }
}

/// `(≤L, ≤R, l, r)` with `≤L` on α, `≤R` on β, `l : α → β`, `r : β → α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceRecord {
    left: Rel,
    right: Rel,
    l: FunTable,
    r: FunTable,
    /// Advisory only; checks never consult it.
    pub claimed: Option<GaloisClass>,
}

impl EquivalenceRecord {
    pub fn new(left: Rel, right: Rel, l: FunTable, r: FunTable) -> Result<Self> {
        let ctx = "equivalence record";
        left.expect_homogeneous(ctx)?;
        right.expect_homogeneous(ctx)?;
        l.dom().expect_same(left.left(), ctx)?;
        l.cod().expect_same(right.left(), ctx)?;
        r.dom().expect_same(right.left(), ctx)?;
        r.cod().expect_same(left.left(), ctx)?;
        Ok(EquivalenceRecord {
            left,
            right,
            l,
            r,
            claimed: None,
        })
    }

    /// Equality on both sides with identity maps.
    pub fn identity(c: Arc<Carrier>) -> Self {
        let eq = Rel::equality(c.clone());
        let id = FunTable::identity(c);
        EquivalenceRecord {
            left: eq.clone(),
            right: eq,
            l: id.clone(),
            r: id,
            claimed: None,
        }
    }

    pub fn with_claim(mut self, class: GaloisClass) -> Self {
        self.claimed = Some(class);
        self
    }

    /// `≤L`
    pub fn left(&self) -> &Rel {
        &self.left
    }

    /// `≤R`
    pub fn right(&self) -> &Rel {
        &self.right
    }

    pub fn l(&self) -> &FunTable {
        &self.l
    }

    pub fn r(&self) -> &FunTable {
        &self.r
    }

    /// α
    pub fn alpha(&self) -> &Arc<Carrier> {
        self.left.left()
    }

    /// β
    pub fn beta(&self) -> &Arc<Carrier> {
        self.right.left()
    }

    /// `(≤R, ≤L, r, l)`: the record read in the other direction.
    pub fn flipped(&self) -> EquivalenceRecord {
        EquivalenceRecord {
            left: self.right.clone(),
            right: self.left.clone(),
            l: self.r.clone(),
            r: self.l.clone(),
            claimed: None,
        }
    }

    /// Same relations, different maps.
    pub fn with_maps(&self, l: FunTable, r: FunTable) -> Result<Self> {
        EquivalenceRecord::new(self.left.clone(), self.right.clone(), l, r)
    }
}
