use std::fmt;

use pgal_value::{Error, Result};

/// Which relation of a registered equivalence a leaf refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// A named binary condition applied to two binders, as in `geq(i1,i2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Guard {
    pub cond: String,
    pub args: (String, String),
}

/// Target relation expressions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RelExpr {
    Atom(String),
    Eq(String),
    EquivSide(String, Side),
    DepFun {
        binder1: String,
        binder2: String,
        dom: Box<RelExpr>,
        guard: Option<Guard>,
        cod: Box<RelExpr>,
    },
    Functor(String, Vec<RelExpr>),
    Compose(Box<RelExpr>, Box<RelExpr>),
}

/// Binder name that binds nothing.
pub const WILDCARD: &str = "_";

const MAX_DEPTH: usize = 64;

impl RelExpr {
    /// Short description of the node kind, for shape errors.
    pub fn head(&self) -> String {
        match self {
            RelExpr::Atom(_) | RelExpr::Eq(_) | RelExpr::EquivSide(..) => "leaf".into(),
            RelExpr::DepFun { .. } => "fun".into(),
            RelExpr::Functor(name, args) => format!("functor {name}/{}", args.len()),
            RelExpr::Compose(..) => "compose".into(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, RelExpr::Atom(_) | RelExpr::Eq(_) | RelExpr::EquivSide(..))
    }
}

impl fmt::Display for RelExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelExpr::Atom(n) => write!(f, "atom {n}"),
            RelExpr::Eq(c) => write!(f, "eq {c}"),
            RelExpr::EquivSide(n, s) => write!(f, "{} {n}", s.name()),
            RelExpr::DepFun { binder1, binder2, dom, guard, cod } => {
                write!(f, "fun({binder1} {binder2}: {dom}")?;
                if let Some(g) = guard {
                    write!(f, " if {}({},{})", g.cond, g.args.0, g.args.1)?;
                }
                write!(f, ") -> {cod}")
            }
            RelExpr::Functor(n, args) => {
                write!(f, "functor {n}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            RelExpr::Compose(a, b) => write!(f, "compose({a}, {b})"),
        }
    }
}

/// Parses `atom NAME | eq CARRIER | left NAME | right NAME
/// | fun(x y: EXPR [if COND(x,y)]) -> EXPR | functor NAME(EXPR,…)
/// | compose(EXPR, EXPR)`, with optional surrounding parentheses.
pub fn parse_rel_expr(text: &str) -> Result<RelExpr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr(0)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{tok}'")))
        }
    }

    fn ident(&mut self) -> Result<String> {
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

    fn name(&mut self) -> Result<String> {
        let at = self.pos;
        let n = self.ident()?;
        if n == WILDCARD || n == "if" {
            self.pos = at;
            return Err(self.err("reserved word used as a name"));
        }
        Ok(n)
    }

    fn expr(&mut self, depth: usize) -> Result<RelExpr> {
        if depth > MAX_DEPTH {
            return Err(self.err("expression nested too deeply"));
        }
        if self.eat("(") {
            let e = self.expr(depth + 1)?;
            self.expect(")")?;
            return Ok(e);
        }
        let at = self.pos;
        let kw = self.ident()?;
        match kw.as_str() {
            "atom" => Ok(RelExpr::Atom(self.name()?)),
            "eq" => Ok(RelExpr::Eq(self.name()?)),
            "left" => Ok(RelExpr::EquivSide(self.name()?, Side::Left)),
            "right" => Ok(RelExpr::EquivSide(self.name()?, Side::Right)),
            "fun" => {
                self.expect("(")?;
                let binder1 = self.ident()?;
                let binder2 = self.ident()?;
                self.expect(":")?;
                let dom = self.expr(depth + 1)?;
                let guard = if self.eat("if") {
                    let cond = self.name()?;
                    self.expect("(")?;
                    let a = self.name()?;
                    self.expect(",")?;
                    let b = self.name()?;
                    self.expect(")")?;
                    Some(Guard { cond, args: (a, b) })
                } else {
                    None
                };
                self.expect(")")?;
                self.expect("->")?;
                let cod = self.expr(depth + 1)?;
                Ok(RelExpr::DepFun {
                    binder1,
                    binder2,
                    dom: Box::new(dom),
                    guard,
                    cod: Box::new(cod),
                })
            }
            "functor" => {
                let name = self.name()?;
                self.expect("(")?;
                let mut args = Vec::new();
                if !self.eat(")") {
                    loop {
                        args.push(self.expr(depth + 1)?);
                        if self.eat(")") {
                            break;
                        }
                        self.expect(",")?;
                    }
                }
                Ok(RelExpr::Functor(name, args))
            }
            "compose" => {
                self.expect("(")?;
                let a = self.expr(depth + 1)?;
                self.expect(",")?;
                let b = self.expr(depth + 1)?;
                self.expect(")")?;
                Ok(RelExpr::Compose(Box::new(a), Box::new(b)))
            }
            _ => {
                self.pos = at;
                Err(self.err(&format!("unknown expression form {kw:?}")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_guarded_subtraction() {
        let e = parse_rel_expr("fun(i1 _: atom Zpos) -> fun(i2 _: atom Zpos if geq(i1,i2)) -> atom Zpos")
            .unwrap();
        let RelExpr::DepFun { binder1, cod, guard, .. } = &e else { panic!("{e:?}") };
        assert_eq!(binder1, "i1");
        assert!(guard.is_none());
        let RelExpr::DepFun { guard: Some(g), .. } = cod.as_ref() else { panic!() };
        assert_eq!(g.cond, "geq");
        assert_eq!(g.args, ("i1".to_string(), "i2".to_string()));
        assert_eq!(parse_rel_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn parses_functors_and_composition() {
        let e = parse_rel_expr("compose(functor option(atom A), (left B))").unwrap();
        assert_eq!(e.to_string(), "compose(functor option(atom A), left B)");
        let e = parse_rel_expr("functor unit()").unwrap();
        assert_eq!(e, RelExpr::Functor("unit".into(), vec![]));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "atom", "atom _", "fun(x: atom A) -> atom B", "lambda x", "atom A atom B", "compose(atom A)"] {
            assert!(parse_rel_expr(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn depth_is_bounded() {
        let deep = format!("{}atom A{}", "(".repeat(200), ")".repeat(200));
        assert!(parse_rel_expr(&deep).is_err());
    }
}
