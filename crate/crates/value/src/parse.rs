use crate::{Error, Result, Value, DEFAULT_LIST_BOUND};

const MAX_DEPTH: usize = 64;

/// Parses a value with the default list bound.
pub fn parse_value(text: &str) -> Result<Value> {
    parse_value_with(text, DEFAULT_LIST_BOUND)
}

/// Parses `INT | true | false | (v,v[,v]*) | [v,...] | IDENT(v,...)`.
///
/// Whitespace between tokens is ignored. Offsets in errors are byte offsets.
pub fn parse_value_with(text: &str, list_bound: usize) -> Result<Value> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        list_bound,
    };
    let v = p.value(0)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    list_bound: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn value(&mut self, depth: usize) -> Result<Value> {
        if depth > MAX_DEPTH {
            return Err(self.err("nesting too deep"));
        }
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'-') | Some(b'0'..=b'9') => self.int(),
            Some(b'(') => {
                self.pos += 1;
                let first = self.value(depth + 1)?;
                self.expect(b',')?;
                let mut items = vec![first, self.value(depth + 1)?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    items.push(self.value(depth + 1)?);
                }
                self.expect(b')')?;
                Ok(Value::Tuple(items))
            }
            Some(b'[') => {
                let start = self.pos;
                self.pos += 1;
                let items = self.seq(b']', depth)?;
                if items.len() > self.list_bound {
                    return Err(Error::ListBound {
                        pos: start,
                        len: items.len(),
                        bound: self.list_bound,
                    });
                }
                Ok(Value::List(items))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let ident = std::str::from_utf8(&self.src[start..self.pos])
                    .expect("ascii identifier")
                    .to_string();
                match ident.as_str() {
                    "true" => Ok(Value::Bool(true)),
                    "false" => Ok(Value::Bool(false)),
                    _ => {
                        self.expect(b'(')?;
                        let args = self.seq(b')', depth)?;
                        Ok(Value::Cons(ident, args))
                    }
                }
            }
            Some(_) => Err(self.err("unexpected character")),
        }
    }

    /// Comma-separated values up to `close`; the opener is already consumed.
    fn seq(&mut self, close: u8, depth: usize) -> Result<Vec<Value>> {
        let mut items = Vec::new();
        if self.peek() == Some(close) {
            self.pos += 1;
            return Ok(items);
        }
        loop {
            items.push(self.value(depth + 1)?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(c) if c == close => {
                    self.pos += 1;
                    return Ok(items);
                }
                _ => return Err(self.err(&format!("expected ',' or '{}'", close as char))),
            }
        }
    }

    fn int(&mut self) -> Result<Value> {
        let start = self.pos;
        if self.src[self.pos] == b'-' {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(self.err("expected digit"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse::<i64>().map(Value::Int).map_err(|_| Error::Syntax {
            pos: start,
            msg: "integer out of range".to_string(),
        })
    }
}
