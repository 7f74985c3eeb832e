use std::fmt;

use crate::{Error, Result, Value};

/// A named finite set of values, kept sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Carrier {
    name: String,
    elements: Vec<Value>,
}

impl Carrier {
    pub fn new(name: impl Into<String>, elements: impl IntoIterator<Item = Value>) -> Self {
        let mut elements: Vec<Value> = elements.into_iter().collect();
        elements.sort();
        elements.dedup();
        Carrier {
            name: name.into(),
            elements,
        }
    }

    /// Integers `lo..=hi`.
    pub fn ints(name: impl Into<String>, lo: i64, hi: i64) -> Self {
        Carrier::new(name, (lo..=hi).map(Value::Int))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> &[Value] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, v: &Value) -> Option<usize> {
        self.elements.binary_search(v).ok()
    }

    pub fn contains(&self, v: &Value) -> bool {
        self.index_of(v).is_some()
    }

    pub fn require(&self, v: &Value) -> Result<usize> {
        self.index_of(v).ok_or_else(|| Error::NotInCarrier {
            value: v.to_string(),
            carrier: self.name.clone(),
        })
    }

    /// Same name and same elements.
    pub fn same_as(&self, other: &Carrier) -> bool {
        std::ptr::eq(self, other) || self == other
    }

    pub fn expect_same(&self, other: &Carrier, context: &str) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::mismatch(context, &self.name, &other.name))
        }
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}
