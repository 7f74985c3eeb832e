use std::sync::Arc;

use crate::{Carrier, Error, Result, Value};

/// Constructor name used to encode a table as an element of a function space.
pub const FN_TAG: &str = "fn";

/// A total function from `dom` to `cod`, stored as outputs aligned with the
/// (sorted) domain elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FunTable {
    dom: Arc<Carrier>,
    cod: Arc<Carrier>,
    outputs: Vec<Value>,
    idx: Vec<usize>,
}

impl FunTable {
    /// Builds a table by evaluating `f` on every domain element.
    pub fn from_fn(
        dom: Arc<Carrier>,
        cod: Arc<Carrier>,
        mut f: impl FnMut(&Value) -> Value,
    ) -> Result<Self> {
        let outputs: Vec<Value> = dom.elements().iter().map(&mut f).collect();
        FunTable::checked(dom, cod, outputs)
    }

    /// Builds a table from an explicit graph, which must be total and functional.
    pub fn from_pairs(
        dom: Arc<Carrier>,
        cod: Arc<Carrier>,
        pairs: impl IntoIterator<Item = (Value, Value)>,
    ) -> Result<Self> {
        let mut outputs: Vec<Option<Value>> = vec![None; dom.len()];
        for (x, y) in pairs {
            let i = dom.require(&x)?;
            cod.require(&y)?;
            match &outputs[i] {
                Some(prev) if *prev != y => {
                    return Err(Error::Wiring(format!(
                        "table maps {x} to both {prev} and {y}"
                    )))
                }
                _ => outputs[i] = Some(y),
            }
        }
        let mut out = Vec::with_capacity(outputs.len());
        for (i, o) in outputs.into_iter().enumerate() {
            match o {
                Some(v) => out.push(v),
                None => {
                    return Err(Error::Wiring(format!(
                        "table is not total: no entry for {}",
                        dom.elements()[i]
                    )))
                }
            }
        }
        FunTable::checked(dom, cod, out)
    }

    fn checked(dom: Arc<Carrier>, cod: Arc<Carrier>, outputs: Vec<Value>) -> Result<Self> {
        let idx = outputs
            .iter()
            .map(|v| cod.require(v))
            .collect::<Result<Vec<usize>>>()?;
        Ok(FunTable {
            dom,
            cod,
            outputs,
            idx,
        })
    }

    /// Builds a table from output indices into `cod`.
    pub fn from_indices(dom: Arc<Carrier>, cod: Arc<Carrier>, idx: Vec<usize>) -> Result<Self> {
        if idx.len() != dom.len() || idx.iter().any(|&i| i >= cod.len()) {
            return Err(Error::Wiring(format!(
                "index table does not fit {} -> {}",
                dom.name(),
                cod.name()
            )));
        }
        let outputs = idx.iter().map(|&i| cod.elements()[i].clone()).collect();
        Ok(FunTable {
            dom,
            cod,
            outputs,
            idx,
        })
    }

    pub fn identity(c: Arc<Carrier>) -> Self {
        let outputs = c.elements().to_vec();
        let idx = (0..c.len()).collect();
        FunTable {
            dom: c.clone(),
            cod: c,
            outputs,
            idx,
        }
    }

    pub fn constant(dom: Arc<Carrier>, cod: Arc<Carrier>, v: Value) -> Result<Self> {
        FunTable::from_fn(dom, cod, |_| v.clone())
    }

    pub fn dom(&self) -> &Arc<Carrier> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Carrier> {
        &self.cod
    }

    pub fn outputs(&self) -> &[Value] {
        &self.outputs
    }

    /// Output indices into `cod`, aligned with the domain.
    pub fn indices(&self) -> &[usize] {
        &self.idx
    }

    /// Index of the output for the domain element with index `i`.
    pub fn apply_idx(&self, i: usize) -> usize {
        self.idx[i]
    }

    pub fn apply(&self, x: &Value) -> Result<&Value> {
        let i = self.dom.require(x)?;
        Ok(&self.outputs[i])
    }

    /// `self.apply(x)` for callers that have already established membership.
    pub fn at(&self, x: &Value) -> &Value {
        match self.dom.index_of(x) {
            Some(i) => &self.outputs[i],
            None => panic!("{x} is not in the domain {}", self.dom.name()),
        }
    }

    /// Domain/output pairs in domain order.
    pub fn graph(&self) -> impl Iterator<Item = (&Value, &Value)> {
        self.dom.elements().iter().zip(self.outputs.iter())
    }

    /// `then ∘ self`: apply `self` first.
    pub fn then(&self, then: &FunTable) -> Result<FunTable> {
        self.cod.expect_same(&then.dom, "function composition")?;
        let idx: Vec<usize> = self.idx.iter().map(|&j| then.idx[j]).collect();
        FunTable::from_indices(self.dom.clone(), then.cod.clone(), idx)
    }

    /// The table as an element of the function space `dom -> cod`.
    pub fn to_value(&self) -> Value {
        Value::Cons(FN_TAG.to_string(), self.outputs.clone())
    }

    /// Decodes a function-space element back into a table.
    pub fn from_value(dom: Arc<Carrier>, cod: Arc<Carrier>, v: &Value) -> Result<Self> {
        let outs = v.cons_args(FN_TAG).ok_or_else(|| {
            Error::Wiring(format!("{v} is not a function value"))
        })?;
        if outs.len() != dom.len() {
            return Err(Error::Wiring(format!(
                "{v} has {} outputs but {} has {} elements",
                outs.len(),
                dom.name(),
                dom.len()
            )));
        }
        FunTable::checked(dom, cod, outs.to_vec())
    }
}

/// `|cod|^|dom|`, or `None` when it does not fit in a `u128`.
pub fn fun_space_size(dom: &Carrier, cod: &Carrier) -> Option<u128> {
    let exp = u32::try_from(dom.len()).ok()?;
    (cod.len() as u128).checked_pow(exp)
}

fn check_cap(dom: &Carrier, cod: &Carrier, cap: usize) -> Result<usize> {
    match fun_space_size(dom, cod) {
        Some(n) if n <= cap as u128 => Ok(n as usize),
        n => Err(Error::CapExceeded {
            what: format!("function space {} -> {}", dom.name(), cod.name()),
            count: match n {
                Some(n) => n.to_string(),
                None => format!("{}^{}", cod.len(), dom.len()),
            },
            cap,
        }),
    }
}

fn odometer(dom_len: usize, cod: &Carrier, mut emit: impl FnMut(Vec<usize>)) {
    if cod.is_empty() {
        if dom_len == 0 {
            emit(Vec::new());
        }
        return;
    }
    let mut idx = vec![0usize; dom_len];
    loop {
        emit(idx.clone());
        // The first position is the most significant digit, which keeps the
        // output in canonical order.
        let mut k = dom_len;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < cod.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// All total tables `dom -> cod`, each exactly once, in canonical order.
pub fn enumerate_fun_tables(
    dom: &Arc<Carrier>,
    cod: &Arc<Carrier>,
    cap: usize,
) -> Result<Vec<FunTable>> {
    let n = check_cap(dom, cod, cap)?;
    let mut out = Vec::with_capacity(n);
    odometer(dom.len(), cod, |idx| {
        let outputs = idx.iter().map(|&i| cod.elements()[i].clone()).collect();
        out.push(FunTable {
            dom: dom.clone(),
            cod: cod.clone(),
            outputs,
            idx,
        })
    });
    Ok(out)
}

/// The function space `dom -> cod` as a carrier of encoded tables.
pub fn fun_space(dom: &Carrier, cod: &Carrier, cap: usize) -> Result<Arc<Carrier>> {
    let n = check_cap(dom, cod, cap)?;
    let mut elems = Vec::with_capacity(n);
    odometer(dom.len(), cod, |idx| {
        let outputs = idx.iter().map(|&i| cod.elements()[i].clone()).collect();
        elems.push(Value::Cons(FN_TAG.to_string(), outputs))
    });
    Ok(Arc::new(Carrier::new(
        format!("({}->{})", dom.name(), cod.name()),
        elems,
    )))
}
