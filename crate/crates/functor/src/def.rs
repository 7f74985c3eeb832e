use std::fmt;
use std::sync::Arc;

use pgal_relation::Rel;
use pgal_value::{Carrier, Error, FunTable, Result, Value};

/// Largest arity accepted for products and sums.
pub const MAX_ARITY: usize = 4;

/// A component map given as a closure.
pub type ValFn<'a> = dyn Fn(&Value) -> Result<Value> + 'a;
/// A component relation given as a closure.
pub type RelFn<'a> = dyn Fn(&Value, &Value) -> bool + 'a;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Shape {
    Identity,
    /// Arity 0; maps are identities and the relator is equality.
    Const(Arc<Carrier>),
    Option,
    /// Lists of length at most `k`.
    List(usize),
    Product(usize),
    /// Tagged `In0(v)`, `In1(v)`, …
    Sum(usize),
    /// `outer ∘ (inner₁, …, innerₘ)`; every inner functor has the same arity.
    Apply(Box<FunctorDef>, Vec<FunctorDef>),
}

/// A natural functor over finite carriers: carrier builder, mapper and
/// relator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorDef {
    shape: Shape,
}

fn sum_tag(i: usize) -> String {
    format!("In{i}")
}

fn check_arity(n: usize) -> Result<usize> {
    if (2..=MAX_ARITY).contains(&n) {
        Ok(n)
    } else {
        Err(Error::Wiring(format!("arity {n} outside 2..={MAX_ARITY}")))
    }
}

fn cap_error(what: &str, count: usize, cap: usize) -> Error {
    Error::CapExceeded {
        what: what.to_string(),
        count: count.to_string(),
        cap,
    }
}

impl FunctorDef {
    pub fn identity() -> Self {
        FunctorDef { shape: Shape::Identity }
    }

    pub fn constant(c: Arc<Carrier>) -> Self {
        FunctorDef { shape: Shape::Const(c) }
    }

    pub fn option() -> Self {
        FunctorDef { shape: Shape::Option }
    }

    pub fn list(k: usize) -> Self {
        FunctorDef { shape: Shape::List(k) }
    }

    pub fn product(n: usize) -> Result<Self> {
        Ok(FunctorDef { shape: Shape::Product(check_arity(n)?) })
    }

    pub fn sum(n: usize) -> Result<Self> {
        Ok(FunctorDef { shape: Shape::Sum(check_arity(n)?) })
    }

    /// `outer` applied to `inner`; `inner` must match the arity of `outer`
    /// and agree on a common arity.
    pub fn apply(outer: FunctorDef, inner: Vec<FunctorDef>) -> Result<Self> {
        if inner.len() != outer.arity() {
            return Err(Error::Wiring(format!(
                "{outer} expects {} arguments, got {}",
                outer.arity(),
                inner.len()
            )));
        }
        if let Some(first) = inner.first() {
            if inner.iter().any(|g| g.arity() != first.arity()) {
                return Err(Error::Wiring(format!("arguments of {outer} differ in arity")));
            }
        }
        Ok(FunctorDef { shape: Shape::Apply(Box::new(outer), inner) })
    }

    pub fn arity(&self) -> usize {
        match &self.shape {
            Shape::Identity | Shape::Option | Shape::List(_) => 1,
            Shape::Const(_) => 0,
            Shape::Product(n) | Shape::Sum(n) => *n,
            Shape::Apply(outer, inner) => inner.first().map_or(outer.arity(), FunctorDef::arity),
        }
    }

    fn expect_arity(&self, n: usize) -> Result<()> {
        if n == self.arity() {
            Ok(())
        } else {
            Err(Error::Wiring(format!("{self} has arity {}, got {n} arguments", self.arity())))
        }
    }

    /// The carrier `F A₁ … Aₙ`. Fails when it would exceed `cap` elements.
    pub fn build_carrier(&self, args: &[Arc<Carrier>], cap: usize) -> Result<Arc<Carrier>> {
        self.expect_arity(args.len())?;
        let named = |elems: Vec<Value>| {
            let names: Vec<&str> = args.iter().map(|c| c.name()).collect();
            Arc::new(Carrier::new(format!("{}({})", self.head(), names.join(",")), elems))
        };
        Ok(match &self.shape {
            Shape::Identity => args[0].clone(),
            Shape::Const(c) => c.clone(),
            Shape::Option => {
                let mut elems = vec![Value::cons("None", vec![])];
                elems.extend(args[0].elements().iter().map(|a| Value::cons("Some", vec![a.clone()])));
                named(elems)
            }
            Shape::List(k) => {
                let a = args[0].elements();
                let total: usize = (0..=*k).map(|i| a.len().saturating_pow(i as u32)).sum();
                if total > cap {
                    return Err(cap_error(&format!("carrier {}", self.head()), total, cap));
                }
                let mut layer = vec![Vec::<Value>::new()];
                let mut elems = vec![Value::List(vec![])];
                for _ in 0..*k {
                    layer = layer
                        .iter()
                        .flat_map(|xs| {
                            a.iter().map(move |x| {
                                let mut ys = xs.clone();
                                ys.push(x.clone());
                                ys
                            })
                        })
                        .collect();
                    elems.extend(layer.iter().cloned().map(Value::List));
                }
                named(elems)
            }
            Shape::Product(_) => {
                let total = args.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
                match total {
                    Some(t) if t <= cap => {}
                    _ => return Err(cap_error("product carrier", total.unwrap_or(usize::MAX), cap)),
                }
                let mut tuples = vec![Vec::<Value>::new()];
                for c in args {
                    tuples = tuples
                        .iter()
                        .flat_map(|xs| {
                            c.elements().iter().map(move |x| {
                                let mut ys = xs.clone();
                                ys.push(x.clone());
                                ys
                            })
                        })
                        .collect();
                }
                named(tuples.into_iter().map(Value::Tuple).collect())
            }
            Shape::Sum(_) => {
                let total: usize = args.iter().map(|c| c.len()).sum();
                if total > cap {
                    return Err(cap_error("sum carrier", total, cap));
                }
                let elems = args
                    .iter()
                    .enumerate()
                    .flat_map(|(i, c)| c.elements().iter().map(move |x| Value::cons(&sum_tag(i), vec![x.clone()])))
                    .collect();
                named(elems)
            }
            Shape::Apply(outer, inner) => {
                let mid = inner
                    .iter()
                    .map(|g| g.build_carrier(args, cap))
                    .collect::<Result<Vec<_>>>()?;
                outer.build_carrier(&mid, cap)?
            }
        })
    }

    fn head(&self) -> String {
        match &self.shape {
            Shape::List(k) => format!("list{k}"),
            Shape::Product(_) => "product".into(),
            Shape::Sum(_) => "sum".into(),
            _ => self.to_string(),
        }
    }

    /// `F_map` over component maps given as closures.
    pub fn map_with(&self, fs: &[&ValFn<'_>], v: &Value) -> Result<Value> {
        let shape_err = || Error::Wiring(format!("{v} is not a value of {self}"));
        match &self.shape {
            Shape::Identity => fs[0](v),
            Shape::Const(_) => Ok(v.clone()),
            Shape::Option => match v {
                Value::Cons(tag, args) if tag == "None" && args.is_empty() => Ok(v.clone()),
                Value::Cons(tag, args) if tag == "Some" && args.len() == 1 => {
                    Ok(Value::cons("Some", vec![fs[0](&args[0])?]))
                }
                _ => Err(shape_err()),
            },
            Shape::List(_) => {
                let xs = v.as_list().ok_or_else(shape_err)?;
                Ok(Value::List(xs.iter().map(|x| fs[0](x)).collect::<Result<_>>()?))
            }
            Shape::Product(n) => match v {
                Value::Tuple(xs) if xs.len() == *n => Ok(Value::Tuple(
                    xs.iter().zip(fs).map(|(x, f)| f(x)).collect::<Result<_>>()?,
                )),
                _ => Err(shape_err()),
            },
            Shape::Sum(n) => match v {
                Value::Cons(tag, args) if args.len() == 1 => {
                    let i = (0..*n).find(|&i| *tag == sum_tag(i)).ok_or_else(shape_err)?;
                    Ok(Value::cons(tag, vec![fs[i](&args[0])?]))
                }
                _ => Err(shape_err()),
            },
            Shape::Apply(outer, inner) => {
                let mids: Vec<Box<ValFn<'_>>> = inner
                    .iter()
                    .map(|g| Box::new(move |x: &Value| g.map_with(fs, x)) as Box<ValFn<'_>>)
                    .collect();
                let refs: Vec<&ValFn<'_>> = mids.iter().map(|b| b.as_ref()).collect();
                outer.map_with(&refs, v)
            }
        }
    }

    /// `F_rel` over component relations given as closures.
    pub fn rel_with(&self, rs: &[&RelFn<'_>], x: &Value, y: &Value) -> bool {
        match &self.shape {
            Shape::Identity => rs[0](x, y),
            Shape::Const(_) => x == y,
            Shape::Option => match (x, y) {
                (Value::Cons(a, xs), Value::Cons(b, ys)) if a == b => match a.as_str() {
                    "None" => xs.is_empty() && ys.is_empty(),
                    "Some" => xs.len() == 1 && ys.len() == 1 && rs[0](&xs[0], &ys[0]),
                    _ => false,
                },
                _ => false,
            },
            Shape::List(_) => match (x.as_list(), y.as_list()) {
                (Some(xs), Some(ys)) => {
                    xs.len() == ys.len() && xs.iter().zip(ys).all(|(a, b)| rs[0](a, b))
                }
                _ => false,
            },
            Shape::Product(n) => match (x, y) {
                (Value::Tuple(xs), Value::Tuple(ys)) if xs.len() == *n && ys.len() == *n => {
                    xs.iter().zip(ys).zip(rs).all(|((a, b), r)| r(a, b))
                }
                _ => false,
            },
            Shape::Sum(n) => match (x, y) {
                (Value::Cons(a, xs), Value::Cons(b, ys)) if a == b && xs.len() == 1 && ys.len() == 1 => {
                    (0..*n).any(|i| *a == sum_tag(i) && rs[i](&xs[0], &ys[0]))
                }
                _ => false,
            },
            Shape::Apply(outer, inner) => {
                let mids: Vec<Box<RelFn<'_>>> = inner
                    .iter()
                    .map(|g| Box::new(move |a: &Value, b: &Value| g.rel_with(rs, a, b)) as Box<RelFn<'_>>)
                    .collect();
                let refs: Vec<&RelFn<'_>> = mids.iter().map(|b| b.as_ref()).collect();
                outer.rel_with(&refs, x, y)
            }
        }
    }

    /// `F_map f₁ … fₙ` applied to one value of the built domain carrier.
    pub fn map_value(&self, fs: &[FunTable], v: &Value) -> Result<Value> {
        self.expect_arity(fs.len())?;
        let fns: Vec<Box<ValFn<'_>>> = fs
            .iter()
            .map(|f| Box::new(move |x: &Value| f.apply(x).cloned()) as Box<ValFn<'_>>)
            .collect();
        let refs: Vec<&ValFn<'_>> = fns.iter().map(|b| b.as_ref()).collect();
        self.map_with(&refs, v)
    }

    /// `F_map f₁ … fₙ` as a table between built carriers.
    pub fn map(&self, fs: &[FunTable], cap: usize) -> Result<FunTable> {
        let doms: Vec<_> = fs.iter().map(|f| f.dom().clone()).collect();
        let cods: Vec<_> = fs.iter().map(|f| f.cod().clone()).collect();
        let dom = self.build_carrier(&doms, cap)?;
        let cod = self.build_carrier(&cods, cap)?;
        let outs = dom
            .elements()
            .iter()
            .map(|v| self.map_value(fs, v))
            .collect::<Result<Vec<_>>>()?;
        FunTable::from_pairs(dom.clone(), cod, dom.elements().iter().cloned().zip(outs))
    }

    /// `F_rel R₁ … Rₙ x y`. Values outside the built carriers are unrelated.
    pub fn rel_holds(&self, rs: &[Rel], x: &Value, y: &Value) -> Result<bool> {
        self.expect_arity(rs.len())?;
        let fns: Vec<Box<RelFn<'_>>> = rs
            .iter()
            .map(|r| Box::new(move |a: &Value, b: &Value| r.holds(a, b)) as Box<RelFn<'_>>)
            .collect();
        let refs: Vec<&RelFn<'_>> = fns.iter().map(|b| b.as_ref()).collect();
        Ok(self.rel_with(&refs, x, y))
    }

    /// `F_rel R₁ … Rₙ` between built carriers.
    pub fn rel(&self, rs: &[Rel], cap: usize) -> Result<Rel> {
        self.expect_arity(rs.len())?;
        let lefts: Vec<_> = rs.iter().map(|r| r.left().clone()).collect();
        let rights: Vec<_> = rs.iter().map(|r| r.right().clone()).collect();
        let left = self.build_carrier(&lefts, cap)?;
        let right = self.build_carrier(&rights, cap)?;
        let fns: Vec<Box<RelFn<'_>>> = rs
            .iter()
            .map(|r| Box::new(move |a: &Value, b: &Value| r.holds(a, b)) as Box<RelFn<'_>>)
            .collect();
        let refs: Vec<&RelFn<'_>> = fns.iter().map(|b| b.as_ref()).collect();
        Ok(Rel::from_fn(left, right, |x, y| self.rel_with(&refs, x, y)))
    }
}

impl fmt::Display for FunctorDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            Shape::Identity => f.write_str("identity"),
            Shape::Const(c) => write!(f, "const({})", c.name()),
            Shape::Option => f.write_str("option"),
            Shape::List(k) => write!(f, "list({k})"),
            Shape::Product(n) => write!(f, "product({n})"),
            Shape::Sum(n) => write!(f, "sum({n})"),
            Shape::Apply(outer, inner) => {
                write!(f, "{outer}[")?;
                for (i, g) in inner.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Parses `identity | option | list(k) | product(n) | sum(n) | const(NAME)
/// | F[G₁,…,Gₘ]`. `const` names are looked up with `resolve`; `list(k)`
/// requires `k ≤ list_bound`.
pub fn builtin_functor(
    text: &str,
    list_bound: usize,
    resolve: &dyn Fn(&str) -> Option<Arc<Carrier>>,
) -> Result<FunctorDef> {
    let mut p = FunctorParser { src: text.as_bytes(), pos: 0, list_bound, resolve };
    let f = p.functor(0)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}

struct FunctorParser<'a> {
    src: &'a [u8],
    pos: usize,
    list_bound: usize,
    resolve: &'a dyn Fn(&str) -> Option<Arc<Carrier>>,
}

impl FunctorParser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn word(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn number(&mut self) -> Result<usize> {
        let at = self.pos;
        let w = self.word()?;
        w.parse().map_err(|_| Error::Syntax { pos: at, msg: format!("expected a number, got {w:?}") })
    }

    fn functor(&mut self, depth: usize) -> Result<FunctorDef> {
        if depth > 16 {
            return Err(self.err("functor nested too deeply"));
        }
        let at = self.pos;
        let head = self.word()?;
        let base = match head.as_str() {
            "identity" => FunctorDef::identity(),
            "option" => FunctorDef::option(),
            "list" | "product" | "sum" | "const" => {
                self.expect(b'(')?;
                let f = if head == "const" {
                    let name = self.word()?;
                    let c = (self.resolve)(&name)
                        .ok_or_else(|| Error::Wiring(format!("unknown carrier {name:?}")))?;
                    FunctorDef::constant(c)
                } else {
                    let n = self.number()?;
                    match head.as_str() {
                        "list" if n > self.list_bound => {
                            return Err(Error::ListBound { pos: at, len: n, bound: self.list_bound });
                        }
                        "list" => FunctorDef::list(n),
                        "product" => FunctorDef::product(n)?,
                        _ => FunctorDef::sum(n)?,
                    }
                };
                self.expect(b')')?;
                f
            }
            _ => {
                return Err(Error::Syntax { pos: at, msg: format!("unknown functor {head:?}") });
            }
        };
        if !self.eat(b'[') {
            return Ok(base);
        }
        let mut inner = vec![self.functor(depth + 1)?];
        while self.eat(b',') {
            inner.push(self.functor(depth + 1)?);
        }
        self.expect(b']')?;
        FunctorDef::apply(base, inner)
    }
}
