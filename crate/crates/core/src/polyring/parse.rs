//! Text syntax for polynomials: `3*x^2*y - z + 1`, with parentheses and
//! integer powers. Coefficients are reduced modulo the characteristic.

use std::fmt::Write;

use super::{PolyRing, Polynomial};
use crate::error::{Error, Result};

/// Parsed expressions may not exceed this total degree.
pub const MAX_PARSE_DEGREE: u32 = 1000;
/// Nor this many terms in any intermediate product.
pub const MAX_PARSE_TERMS: usize = 200_000;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u128),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b'0'..=b'9' => {
                let mut v: u128 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((bytes[i] - b'0') as u128))
                        .ok_or_else(|| Error::parse(start, "integer literal too large"))?;
                    i += 1;
                }
                out.push((start, Tok::Num(v)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(s[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = s[start..].chars().next().unwrap_or('?');
                return Err(Error::parse(start, format!("unexpected character {ch:?}")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    depth: usize,
}

/// Polynomial value plus an upper bound on its total degree.
struct Val {
    poly: Polynomial,
    deg: u32,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn mul(&self, a: Val, b: Val, at: usize) -> Result<Val> {
        let deg = a.deg + b.deg;
        if deg > MAX_PARSE_DEGREE {
            return Err(Error::parse(at, format!("degree exceeds {MAX_PARSE_DEGREE}")));
        }
        if a.poly.len().saturating_mul(b.poly.len()) > MAX_PARSE_TERMS {
            return Err(Error::parse(at, "expression too large"));
        }
        Ok(Val { poly: self.ring.mul(&a.poly, &b.poly), deg })
    }

    fn expr(&mut self) -> Result<Val> {
        self.depth += 1;
        if self.depth > 200 {
            return Err(Error::parse(self.offset(), "nesting too deep"));
        }
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                negate = true;
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { self.ring.neg(&first.poly) } else { first.poly };
        let mut deg = first.deg;
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.bump();
            let t = self.term()?;
            deg = deg.max(t.deg);
            acc = if sign { self.ring.sub(&acc, &t.poly) } else { self.ring.add(&acc, &t.poly) };
        }
        self.depth -= 1;
        Ok(Val { poly: acc, deg })
    }

    fn term(&mut self) -> Result<Val> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            let at = self.offset();
            self.bump();
            let f = self.factor()?;
            acc = self.mul(acc, f, at)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Val> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            let at = self.offset();
            self.bump();
            let e = match self.bump() {
                Some(Tok::Num(e)) => e,
                _ => return Err(Error::parse(at, "expected a nonnegative integer exponent")),
            };
            let e = u32::try_from(e).map_err(|_| Error::parse(at, "exponent too large"))?;
            if base.deg.saturating_mul(e) > MAX_PARSE_DEGREE {
                return Err(Error::parse(at, format!("degree exceeds {MAX_PARSE_DEGREE}")));
            }
            let mut acc = Val { poly: self.ring.one(), deg: 0 };
            let mut sq = base;
            let mut e = e;
            while e > 0 {
                if e & 1 == 1 {
                    let s = Val { poly: sq.poly.clone(), deg: sq.deg };
                    acc = self.mul(acc, s, at)?;
                }
                e >>= 1;
                if e > 0 {
                    let s = Val { poly: sq.poly.clone(), deg: sq.deg };
                    sq = self.mul(sq, s, at)?;
                }
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Val> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Num(v)) => {
                let p = self.ring.characteristic() as u128;
                Ok(Val { poly: self.ring.constant((v % p) as i64), deg: 0 })
            }
            Some(Tok::Ident(name)) => {
                let i = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| Error::parse(at, format!("unknown variable `{name}`")))?;
                Ok(Val { poly: self.ring.var(i), deg: 1 })
            }
            Some(Tok::LParen) => {
                let v = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(v),
                    _ => Err(Error::parse(self.toks.get(self.pos - 1).map_or(self.end, |t| t.0), "expected `)`")),
                }
            }
            Some(t) => Err(Error::parse(at, format!("unexpected token {t:?}"))),
            None => Err(Error::parse(at, "unexpected end of input")),
        }
    }
}

impl PolyRing {
    /// Parses a polynomial over this ring's variables.
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        let toks = tokenize(text)?;
        if toks.is_empty() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        let mut p = Parser { ring: self, toks, pos: 0, end: text.len(), depth: 0 };
        let v = p.expr()?;
        if p.pos < p.toks.len() {
            return Err(Error::parse(p.offset(), "trailing input"));
        }
        Ok(v.poly)
    }

    /// Parses a comma-separated list; commas inside parentheses do not split.
    pub fn parse_list(&self, text: &str) -> Result<Vec<Polynomial>> {
        split_top_level(text)
            .into_iter()
            .map(|(off, piece)| self.parse(piece).map_err(|e| shift_offset(e, off)))
            .collect()
    }

    /// Renders `f` in the syntax accepted by [`PolyRing::parse`].
    pub fn format(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, t) in f.terms().iter().enumerate() {
            let c = self.field().signed(t.coeff);
            let neg = c < 0;
            let a = c.unsigned_abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if a != 1 || t.mono.is_one() {
                factors.push(a.to_string());
            }
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.names()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.names()[i], e)),
                }
            }
            let _ = write!(s, "{}", factors.join("*"));
        }
        s
    }

    pub fn format_list(&self, fs: &[Polynomial]) -> String {
        fs.iter().map(|f| self.format(f)).collect::<Vec<_>>().join(", ")
    }
}

fn shift_offset(e: Error, off: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + off, msg },
        other => other,
    }
}

/// Splits on commas at parenthesis depth zero, returning byte offsets.
pub fn split_top_level(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}
