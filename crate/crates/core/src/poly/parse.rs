//! Text syntax for polynomials and rings.
//!
//! Polynomials: `+ - * / ^`, parentheses, integer and rational literals,
//! and juxtaposition as multiplication (`2x`, `XY`). Division is only by
//! constants. Variable names match exactly, then case-insensitively, and an
//! identifier that is not a variable is split into a product of variable
//! names when that is possible (`xy` in `QQ[x,y,z]` is `x*y`).

use num::{BigInt, BigRational};

use super::coeff::Field;
use super::polynomial::Polynomial;
use super::ring::{PolyRing, RingSpec};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Num(
                digits.parse().map_err(|_| Error::Parse(digits.clone()))?,
            ));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
            continue;
        }
        out.push(match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}"))),
        });
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    toks: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in {:?}", self.src))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let d = self.unary()?;
                    if !d.is_constant() {
                        return Err(self.err("division by a non-constant"));
                    }
                    let field = self.ring.field();
                    acc = acc.scale(&field.inv(&d.constant_term()));
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.unary()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Some(Tok::Num(n)) => {
                let q = BigRational::from_integer(n);
                let c = self.ring.field().from_rational(&q)?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => self.identifier(&name),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err("missing ')'")),
                }
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }

    fn identifier(&self, name: &str) -> Result<Polynomial> {
        let vars = resolve_identifier(self.ring, name)
            .ok_or_else(|| self.err(&format!("unknown variable {name:?}")))?;
        let mut exps = vec![0u32; self.ring.nvars()];
        for v in vars {
            exps[v] += 1;
        }
        Ok(Polynomial::monomial(
            self.ring,
            &exps,
            self.ring.field().one(),
        ))
    }
}

fn lookup(ring: &PolyRing, name: &str) -> Option<usize> {
    if let Some(i) = ring.var_index(name) {
        return Some(i);
    }
    let hits: Vec<usize> = ring
        .vars()
        .iter()
        .enumerate()
        .filter(|(_, v)| v.eq_ignore_ascii_case(name))
        .map(|(i, _)| i)
        .collect();
    (hits.len() == 1).then(|| hits[0])
}

/// Resolve an identifier to a product of variables.
fn resolve_identifier(ring: &PolyRing, name: &str) -> Option<Vec<usize>> {
    if let Some(i) = lookup(ring, name) {
        return Some(vec![i]);
    }
    // split into a product of variable names, longest prefix first
    let chars: Vec<char> = name.chars().collect();
    for cut in (1..chars.len()).rev() {
        let head: String = chars[..cut].iter().collect();
        if let Some(i) = lookup(ring, &head) {
            let tail: String = chars[cut..].iter().collect();
            if let Some(mut rest) = resolve_identifier(ring, &tail) {
                rest.insert(0, i);
                return Some(rest);
            }
        }
    }
    None
}

pub(crate) fn parse_polynomial(ring: &PolyRing, text: &str) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        src: text,
    };
    let f = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}

/// Split on commas that are not nested inside parentheses.
pub(crate) fn split_top_level(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if c == ',' && depth == 0 {
            parts.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(c);
        }
    }
    if !cur.trim().is_empty() || !parts.is_empty() {
        parts.push(cur.trim().to_string());
    }
    parts
}

/// Parse a generator list `(f, g, ...)`, `f, g` or a single expression.
pub fn parse_generators(ring: &PolyRing, text: &str) -> Result<Vec<Polynomial>> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let inner = if t.starts_with('(') && matching_paren(t, 0) == Some(t.len() - 1) {
        &t[1..t.len() - 1]
    } else {
        t
    };
    split_top_level(inner)
        .iter()
        .map(|g| parse_polynomial(ring, g))
        .collect()
}

fn matching_paren(s: &str, open: usize) -> Option<usize> {
    let mut depth = 0;
    for (i, c) in s.char_indices().skip(open) {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_field(s: &str) -> Result<Field> {
    let s = s.trim();
    match s {
        "QQ" | "Q" | "ℚ" => return Ok(Field::Rational),
        _ => {}
    }
    let digits = s
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| s.strip_prefix("GF"))
        .or_else(|| s.strip_prefix("ZZ/"))
        .or_else(|| s.strip_prefix('F'));
    match digits.and_then(|d| d.parse::<u32>().ok()) {
        Some(p) => Field::prime(p),
        None => Err(Error::Parse(format!("unknown coefficient field {s:?}"))),
    }
}

pub(crate) fn parse_ring(text: &str) -> Result<RingSpec> {
    let t = text.trim();
    let open = t
        .find('[')
        .ok_or_else(|| Error::Parse(format!("expected FIELD[vars] in {t:?}")))?;
    let close = t
        .find(']')
        .ok_or_else(|| Error::Parse(format!("missing ']' in {t:?}")))?;
    if close < open {
        return Err(Error::Parse(format!("malformed ring {t:?}")));
    }
    let field = parse_field(&t[..open])?;
    let vars: Vec<String> = t[open + 1..close]
        .split(',')
        .map(|v| v.trim().to_string())
        .filter(|v| !v.is_empty())
        .collect();
    let base = PolyRing::new(&vars, field)?;
    let rest = t[close + 1..].trim();
    if rest.is_empty() {
        return Ok(RingSpec::polynomial_ring(base));
    }
    let rels = rest
        .strip_prefix('/')
        .ok_or_else(|| Error::Parse(format!("expected '/' after the variables in {t:?}")))?;
    let gens = parse_generators(&base, rels)?;
    RingSpec::quotient(base, gens)
}
