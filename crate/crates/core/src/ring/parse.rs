//! Text syntax for rings and elements.
//!
//! Rings: `Z`, `Q`, `F_7` (or `F7`), `Z/6`, `Z/(6)`, `Z[t]`, `F_5[x,y]`, `Z[1/2]`,
//! `Z[t]/(t^3)`, `prod(Z, F_3)`, `milnor(Z, 2)`; suffixes chain left to right.
//! Elements: integer literals, variables, `+ - * / ^`, parentheses, juxtaposition as
//! multiplication, and `(a, b)` pairs for product and semidirect rings.

use num_bigint::BigInt;

use super::{Ring, RingElement, RingKind};
use crate::error::{Error, Result};

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Index of the bracket closing the one opened just before `from`.
fn closing(s: &str, from: usize, open: char, close: char) -> Result<usize> {
    let mut depth = 1;
    for (i, c) in s[from..].char_indices() {
        if c == open {
            depth += 1;
        } else if c == close {
            depth -= 1;
            if depth == 0 {
                return Ok(from + i);
            }
        }
    }
    Err(err(format!("unbalanced {open} in {s:?}")))
}

/// Split on top-level commas.
fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

impl Ring {
    /// Parse a ring descriptor such as `Z[t]/(t^3)` or `Z[1/2][1/3]`.
    pub fn parse_spec(spec: &str) -> Result<Ring> {
        let s = spec.trim();
        let (mut ring, mut rest) = parse_ring_atom(s)?;
        loop {
            rest = rest.trim_start();
            if rest.is_empty() {
                return Ok(ring);
            }
            if let Some(r) = rest.strip_prefix('[') {
                let end = closing(r, 0, '[', ']')?;
                let inner = r[..end].trim();
                ring = if let Some(m) = inner.strip_prefix("1/") {
                    let m = ring.parse(m)?;
                    Ring::localization(&ring, &m)?
                } else {
                    let vars: Vec<&str> = inner.split(',').map(str::trim).collect();
                    Ring::polynomial(&ring, &vars)?
                };
                rest = &r[end + 1..];
            } else if let Some(r) = rest.strip_prefix('/') {
                let r = r.trim_start();
                let (m, after) = if let Some(r2) = r.strip_prefix('(') {
                    let end = closing(r2, 0, '(', ')')?;
                    (&r2[..end], &r2[end + 1..])
                } else {
                    let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
                    (&r[..end], &r[end..])
                };
                let m = ring.parse(m)?;
                ring = Ring::quotient(&ring, &m)?;
                rest = after;
            } else {
                return Err(err(format!("unexpected {rest:?} in ring {spec:?}")));
            }
        }
    }

    /// Parse an element expression in this ring.
    pub fn parse(&self, text: &str) -> Result<RingElement> {
        let tokens = tokenize(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let x = p.expr(self)?;
        if p.pos != p.tokens.len() {
            return Err(err(format!("trailing input in {text:?}")));
        }
        Ok(x)
    }
}

fn parse_ring_atom(s: &str) -> Result<(Ring, &str)> {
    for (name, ctor) in [("prod(", 0), ("milnor(", 1)] {
        if let Some(r) = s.strip_prefix(name) {
            let end = closing(r, 0, '(', ')')?;
            let parts = split_top(&r[..end]);
            if parts.len() != 2 {
                return Err(err(format!("{name}..) takes two arguments")));
            }
            let a = Ring::parse_spec(parts[0])?;
            let ring = if ctor == 0 {
                Ring::product(&a, &Ring::parse_spec(parts[1])?)
            } else {
                let m = a.parse(parts[1])?;
                Ring::milnor_semidirect(&a, &m)?
            };
            return Ok((ring, &r[end + 1..]));
        }
    }
    if let Some(r) = s.strip_prefix('(') {
        let end = closing(r, 0, '(', ')')?;
        return Ok((Ring::parse_spec(&r[..end])?, &r[end + 1..]));
    }
    if let Some(r) = s.strip_prefix('Z') {
        return Ok((Ring::integers(), r));
    }
    if let Some(r) = s.strip_prefix('Q') {
        return Ok((Ring::rationals(), r));
    }
    if let Some(r) = s.strip_prefix('F') {
        let r = r.strip_prefix('_').unwrap_or(r);
        let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
        let p: u64 = r[..end].parse().map_err(|_| err(format!("bad prime field {s:?}")))?;
        return Ok((Ring::prime_field(p)?, &r[end..]));
    }
    Err(err(format!("unknown ring {s:?}")))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Num(digits.parse().unwrap()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^(),".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(err(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self, r: &Ring) -> Result<RingElement> {
        let mut acc = self.term(r)?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term(r)?;
            } else if self.eat('-') {
                acc = &acc - &self.term(r)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('(')))
    }

    fn term(&mut self, r: &Ring) -> Result<RingElement> {
        let mut acc = self.unary(r)?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary(r)?;
            } else if self.eat('/') {
                acc = acc.try_div(&self.unary(r)?)?;
            } else if self.starts_atom() {
                acc = &acc * &self.power(r)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self, r: &Ring) -> Result<RingElement> {
        if self.eat('-') {
            Ok(-self.unary(r)?)
        } else {
            self.power(r)
        }
    }

    fn power(&mut self, r: &Ring) -> Result<RingElement> {
        let base = self.atom(r)?;
        if self.eat('^') {
            let neg = self.eat('-');
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                return Err(err("expected an integer exponent"));
            };
            self.pos += 1;
            let e: i64 = i64::try_from(&n).map_err(|_| err("exponent too large"))?;
            return base.powi(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self, r: &Ring) -> Result<RingElement> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(r.from_bigint(&n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                r.var(&name)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let save = self.pos;
                if let Some((ra, rb)) = pair_rings(r) {
                    if let Ok(a) = self.expr(&ra) {
                        if self.eat(',') {
                            let b = self.expr(&rb)?;
                            if !self.eat(')') {
                                return Err(err("expected )"));
                            }
                            return r.element(super::Value::pair(a.into_value(), b.into_value()));
                        }
                    }
                    self.pos = save;
                }
                let x = self.expr(r)?;
                if !self.eat(')') {
                    return Err(err("expected )"));
                }
                Ok(x)
            }
            other => Err(err(format!("unexpected token {other:?}"))),
        }
    }
}

fn pair_rings(r: &Ring) -> Option<(Ring, Ring)> {
    match r.kind() {
        RingKind::Product(a, b) => Some((a.clone(), b.clone())),
        RingKind::MilnorSemidirect { base, poly, .. } => Some((base.clone(), poly.clone())),
        _ => None,
    }
}
