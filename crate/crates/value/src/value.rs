use std::fmt;

/// An element of the universe.
///
/// The derived order is the canonical one: `Int < Bool < Tuple < List < Cons`
/// by tag, then lexicographically on the payload. A proper prefix of a
/// sequence is smaller than the sequence, and constructors compare by name
/// before arguments.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Tuple(Vec<Value>),
    List(Vec<Value>),
    Cons(String, Vec<Value>),
}

impl Value {
    pub fn int(i: i64) -> Self {
        Value::Int(i)
    }

    pub fn cons(name: &str, args: Vec<Value>) -> Self {
        Value::Cons(name.to_string(), args)
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Value::Int(i) => Some(*i),
            _ => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Value]> {
        match self {
            Value::List(xs) => Some(xs),
            _ => None,
        }
    }

    /// Arguments of a constructor value with the given name.
    pub fn cons_args(&self, name: &str) -> Option<&[Value]> {
        match self {
            Value::Cons(n, args) if n == name => Some(args),
            _ => None,
        }
    }

    /// Longest `List` anywhere inside the value.
    pub fn max_list_len(&self) -> usize {
        match self {
            Value::Int(_) | Value::Bool(_) => 0,
            Value::List(xs) => xs
                .iter()
                .map(Value::max_list_len)
                .max()
                .unwrap_or(0)
                .max(xs.len()),
            Value::Tuple(xs) | Value::Cons(_, xs) => {
                xs.iter().map(Value::max_list_len).max().unwrap_or(0)
            }
        }
    }
}

fn write_seq(f: &mut fmt::Formatter<'_>, xs: &[Value]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(i) => write!(f, "{i}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Tuple(xs) => {
                f.write_str("(")?;
                write_seq(f, xs)?;
                f.write_str(")")
            }
            Value::List(xs) => {
                f.write_str("[")?;
                write_seq(f, xs)?;
                f.write_str("]")
            }
            Value::Cons(name, xs) => {
                write!(f, "{name}(")?;
                write_seq(f, xs)?;
                f.write_str(")")
            }
        }
    }
}

/// Renders a witness tuple as `(a,b,...)`.
pub fn show_tuple(xs: &[Value]) -> String {
    let inner: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    #[test]
    fn tag_rank_orders_before_payload() {
        assert_eq!(Value::Int(2).cmp(&Value::Bool(true)), Ordering::Less);
        assert!(Value::Bool(true) < Value::Tuple(vec![Value::Int(0), Value::Int(0)]));
        assert!(Value::Tuple(vec![]) < Value::List(vec![]));
        assert!(Value::List(vec![Value::Int(9)]) < Value::cons("a", vec![]));
    }

    #[test]
    fn prefix_is_smaller() {
        let a = Value::List(vec![Value::Int(0)]);
        let b = Value::List(vec![Value::Int(0), Value::Int(1)]);
        assert_eq!(a.cmp(&b), Ordering::Less);
        assert_eq!(Value::Int(0).cmp(&Value::Int(1)), Ordering::Less);
    }

    #[test]
    fn option_constructors_order_none_first() {
        assert!(Value::cons("None", vec![]) < Value::cons("Some", vec![Value::Int(0)]));
    }

    #[test]
    fn display_matches_grammar() {
        let v = Value::cons(
            "fset",
            vec![Value::Tuple(vec![Value::Int(-1), Value::Bool(false)]), Value::List(vec![])],
        );
        assert_eq!(v.to_string(), "fset((-1,false),[])");
        assert_eq!(Value::cons("None", vec![]).to_string(), "None()");
    }
}
