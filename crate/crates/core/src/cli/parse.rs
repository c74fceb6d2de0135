//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! Expr    := ['-'] Term (('+' | '-') Term)*
//! Term    := Factor ('*' Factor)*
//! Factor  := Base ('^' natural)?
//! Base    := integer ('/' positive-integer)? | variable | '(' Expr ')'
//! ```
//!
//! Whitespace is ignored and juxtaposition is an error.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::polycore::Polynomial;
use crate::{Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source.
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: expected {}, found {}", self.position, self.expected.join(" or "), self.found)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Sym(c) => format!("{c:?}"),
            Tok::End => "end of input".into(),
        }
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Int(src[start..i].parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            let ch = src[i..].chars().next().unwrap();
            return Err(ParseError {
                position: i,
                expected: vec!["number", "variable", "operator"],
                found: format!("{ch:?}"),
            });
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let (position, tok) = &self.toks[self.pos];
        ParseError { position: *position, expected, found: tok.describe() }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let negate = self.eat('-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.base()?;
        if self.eat('^') {
            let Tok::Int(e) = self.peek().clone() else {
                return Err(self.error(vec!["exponent"]));
            };
            let e: u32 = e.try_into().map_err(|_| self.error(vec!["exponent below 2^32"]))?;
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly, ParseError> {
        let n = self.vars.len();
        match self.peek().clone() {
            Tok::Int(num) => {
                self.pos += 1;
                let mut value = Rational::from_integer(num);
                if self.eat('/') {
                    let Tok::Int(den) = self.peek().clone() else {
                        return Err(self.error(vec!["denominator"]));
                    };
                    if den.is_zero() {
                        return Err(self.error(vec!["positive denominator"]));
                    }
                    self.pos += 1;
                    value /= Rational::from_integer(den);
                }
                Ok(Polynomial::constant(n, value))
            }
            Tok::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var(n, i))
                }
                None => Err(self.error(vec!["declared variable"])),
            },
            Tok::Sym('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error(vec!["\"+\"", "\"-\"", "\"*\"", "\"^\"", "\")\""]));
                }
                Ok(inner)
            }
            _ => Err(self.error(vec!["number", "variable", "\"(\""])),
        }
    }
}

/// Parses `src` as a polynomial in `vars` (in that order).
pub fn parse_polynomial(src: &str, vars: &[String]) -> Result<Poly, ParseError> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0, vars };
    let poly = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(vec!["\"+\"", "\"-\"", "\"*\"", "\"^\"", "end of input"]));
    }
    Ok(poly)
}

/// Identifiers appearing in `src`, in order of first appearance.
pub fn identifiers(src: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    if let Ok(toks) = tokenize(src) {
        for (_, t) in toks {
            if let Tok::Ident(s) = t {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Orders names like `x2` before `x10`.
pub fn natural_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    fn split(s: &str) -> (&str, Option<BigInt>) {
        let cut = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        (&s[..cut], s[cut..].parse().ok())
    }
    let (pa, na) = split(a);
    let (pb, nb) = split(b);
    pa.cmp(pb).then(na.cmp(&nb)).then(a.cmp(b))
}

/// Parses a rational literal such as `-3/4`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    s.trim().parse().ok()
}
