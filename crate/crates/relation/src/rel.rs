use std::fmt;
use std::sync::Arc;

use pgal_value::{Carrier, Error, Result, Value};

/// A finite binary relation between two carriers.
///
/// Pairs are stored as sorted adjacency rows over element indices. Carriers
/// are sorted, so iterating rows in order visits pairs in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rel {
    left: Arc<Carrier>,
    right: Arc<Carrier>,
    rows: Vec<Vec<u32>>,
    cols: Vec<u32>,
}

impl Rel {
    pub fn new(
        left: Arc<Carrier>,
        right: Arc<Carrier>,
        pairs: impl IntoIterator<Item = (Value, Value)>,
    ) -> Result<Self> {
        let mut idx = Vec::new();
        for (x, y) in pairs {
            idx.push((left.require(&x)?, right.require(&y)?));
        }
        Ok(Rel::from_index_pairs(left, right, idx))
    }

    /// Panics if an index is out of range.
    pub fn from_index_pairs(
        left: Arc<Carrier>,
        right: Arc<Carrier>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut rows = vec![Vec::new(); left.len()];
        for (i, j) in pairs {
            assert!(j < right.len(), "column {j} out of range");
            rows[i].push(j as u32);
        }
        for row in &mut rows {
            row.sort_unstable();
            row.dedup();
        }
        Rel::from_rows(left, right, rows)
    }

    fn from_rows(left: Arc<Carrier>, right: Arc<Carrier>, rows: Vec<Vec<u32>>) -> Self {
        let mut cols = vec![0u32; right.len()];
        for row in &rows {
            for &j in row {
                cols[j as usize] += 1;
            }
        }
        Rel {
            left,
            right,
            rows,
            cols,
        }
    }

    /// The relation `{(x_i, y_j) | keep(i, j)}` over element indices.
    pub fn from_index_fn(
        left: Arc<Carrier>,
        right: Arc<Carrier>,
        mut keep: impl FnMut(usize, usize) -> bool,
    ) -> Self {
        let rows = (0..left.len())
            .map(|i| {
                (0..right.len())
                    .filter(|&j| keep(i, j))
                    .map(|j| j as u32)
                    .collect()
            })
            .collect();
        Rel::from_rows(left, right, rows)
    }

    pub fn from_fn(
        left: Arc<Carrier>,
        right: Arc<Carrier>,
        mut keep: impl FnMut(&Value, &Value) -> bool,
    ) -> Self {
        let (l, r) = (left.clone(), right.clone());
        Rel::from_index_fn(left, right, |i, j| {
            keep(&l.elements()[i], &r.elements()[j])
        })
    }

    pub fn empty(left: Arc<Carrier>, right: Arc<Carrier>) -> Self {
        let rows = vec![Vec::new(); left.len()];
        Rel::from_rows(left, right, rows)
    }

    pub fn full(left: Arc<Carrier>, right: Arc<Carrier>) -> Self {
        Rel::from_index_fn(left, right, |_, _| true)
    }

    /// Equality on a carrier.
    pub fn equality(c: Arc<Carrier>) -> Self {
        Rel::from_index_pairs(c.clone(), c.clone(), (0..c.len()).map(|i| (i, i)))
    }

    pub fn left(&self) -> &Arc<Carrier> {
        &self.left
    }

    pub fn right(&self) -> &Arc<Carrier> {
        &self.right
    }

    pub fn is_homogeneous(&self) -> bool {
        self.left.same_as(&self.right)
    }

    pub fn expect_homogeneous(&self, context: &str) -> Result<()> {
        self.left.expect_same(&self.right, context)
    }

    /// Same carriers on both sides as `other`.
    pub fn expect_same_carriers(&self, other: &Rel, context: &str) -> Result<()> {
        self.left.expect_same(&other.left, context)?;
        self.right.expect_same(&other.right, context)
    }

    pub fn holds_idx(&self, i: usize, j: usize) -> bool {
        self.rows[i].binary_search(&(j as u32)).is_ok()
    }

    /// False for values outside the carriers.
    pub fn holds(&self, x: &Value, y: &Value) -> bool {
        match (self.left.index_of(x), self.right.index_of(y)) {
            (Some(i), Some(j)) => self.holds_idx(i, j),
            _ => false,
        }
    }

    /// Right indices related to left index `i`, ascending.
    pub fn row(&self, i: usize) -> &[u32] {
        &self.rows[i]
    }

    pub fn in_dom_idx(&self, i: usize) -> bool {
        !self.rows[i].is_empty()
    }

    pub fn in_codom_idx(&self, j: usize) -> bool {
        self.cols[j] > 0
    }

    /// Only meaningful for homogeneous relations.
    pub fn in_field_idx(&self, i: usize) -> bool {
        self.in_dom_idx(i) || self.in_codom_idx(i)
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn index_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |&j| (i, j as usize)))
    }

    /// Pairs in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = (&Value, &Value)> + '_ {
        self.index_pairs()
            .map(|(i, j)| (&self.left.elements()[i], &self.right.elements()[j]))
    }

    /// Same relation over different (but element-compatible) carrier handles.
    pub fn recarried(&self, left: Arc<Carrier>, right: Arc<Carrier>) -> Result<Rel> {
        Rel::new(
            left,
            right,
            self.pairs().map(|(x, y)| (x.clone(), y.clone())),
        )
    }
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (x, y)) in self.pairs().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({x},{y})")?;
        }
        f.write_str("}")
    }
}

/// A subset of a carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pred {
    carrier: Arc<Carrier>,
    mask: Vec<bool>,
}

impl Pred {
    pub fn new(carrier: Arc<Carrier>, members: impl IntoIterator<Item = Value>) -> Result<Self> {
        let mut mask = vec![false; carrier.len()];
        for v in members {
            mask[carrier.require(&v)?] = true;
        }
        Ok(Pred { carrier, mask })
    }

    pub fn from_mask(carrier: Arc<Carrier>, mask: Vec<bool>) -> Result<Self> {
        if mask.len() != carrier.len() {
            return Err(Error::Wiring(format!(
                "mask of length {} over {}",
                mask.len(),
                carrier.name()
            )));
        }
        Ok(Pred { carrier, mask })
    }

    pub fn from_fn(carrier: Arc<Carrier>, mut keep: impl FnMut(&Value) -> bool) -> Self {
        let mask = carrier.elements().iter().map(&mut keep).collect();
        Pred { carrier, mask }
    }

    /// The predicate that holds everywhere (the unrelativised case).
    pub fn full(carrier: Arc<Carrier>) -> Self {
        let mask = vec![true; carrier.len()];
        Pred { carrier, mask }
    }

    pub fn in_dom(r: &Rel) -> Self {
        let mask = (0..r.left.len()).map(|i| r.in_dom_idx(i)).collect();
        Pred {
            carrier: r.left.clone(),
            mask,
        }
    }

    pub fn in_codom(r: &Rel) -> Self {
        let mask = (0..r.right.len()).map(|j| r.in_codom_idx(j)).collect();
        Pred {
            carrier: r.right.clone(),
            mask,
        }
    }

    pub fn in_field(r: &Rel) -> Result<Self> {
        r.expect_homogeneous("in_field")?;
        let mask = (0..r.left.len()).map(|i| r.in_field_idx(i)).collect();
        Ok(Pred {
            carrier: r.left.clone(),
            mask,
        })
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn contains_idx(&self, i: usize) -> bool {
        self.mask[i]
    }

    pub fn contains(&self, v: &Value) -> bool {
        self.carrier.index_of(v).is_some_and(|i| self.mask[i])
    }

    pub fn members(&self) -> impl Iterator<Item = &Value> + '_ {
        self.carrier
            .elements()
            .iter()
            .zip(&self.mask)
            .filter(|(_, &m)| m)
            .map(|(v, _)| v)
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.contains(&true)
    }
}
