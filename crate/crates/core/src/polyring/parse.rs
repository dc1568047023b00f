//! Text syntax for polynomials.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ['-'] atom ['^' integer]
//! atom   := integer ['/' integer] | identifier | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. Printing emits the canonical form
//! `3/2*x0^2*t1 - x1 + 5`, which parses back to the same polynomial.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::Field;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::RingSpec;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "number `{n}`"),
            Tok::Ident(s) => write!(f, "name `{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Int(s.parse().expect("digits")), col));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Syntax {
                    column: col,
                    message: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a RingSpec,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or(self.end_col)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            column: self.col(),
            message: message.into(),
        })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<C: Field>(&mut self) -> Result<Polynomial<C>> {
        let negate = self.eat(&Tok::Minus);
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<C: Field>(&mut self) -> Result<Polynomial<C>> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor<C: Field>(&mut self) -> Result<Polynomial<C>> {
        if self.eat(&Tok::Minus) {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom<C: Field>(&mut self) -> Result<Polynomial<C>> {
        let (nx, nt) = (self.ring.nx(), self.ring.nt());
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let mut den = BigInt::one();
                if self.eat(&Tok::Slash) {
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) => {
                            self.pos += 1;
                            den = d;
                        }
                        _ => return self.err("expected an integer denominator"),
                    }
                }
                match C::from_fraction(&n, &den) {
                    Some(c) => Ok(Polynomial::constant(nx, nt, c)),
                    None => self.err("zero denominator"),
                }
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.ring.index_of(&name) {
                    Some(i) => Ok(Polynomial::var(nx, nt, i)),
                    None => Err(Error::UnknownVariable(name)),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected {t}")),
            None => self.err("unexpected end of input"),
        }
    }
}

impl RingSpec {
    pub fn parse<C: Field>(&self, text: &str) -> Result<Polynomial<C>> {
        let toks = lex(text)?;
        let mut p = Parser {
            ring: self,
            toks,
            pos: 0,
            end_col: text.chars().count() + 1,
        };
        let out = p.expr()?;
        if p.pos != p.toks.len() {
            return p.err("trailing input");
        }
        Ok(out)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(self.var_name(i));
            if e > 1 {
                write!(s, "^{e}").unwrap();
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    pub fn format<C: Field>(&self, p: &Polynomial<C>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                write!(out, "{abs}").unwrap();
            } else if abs.is_one() {
                out.push_str(&self.format_monomial(m));
            } else {
                write!(out, "{abs}*{}", self.format_monomial(m)).unwrap();
            }
        }
        out
    }
}
