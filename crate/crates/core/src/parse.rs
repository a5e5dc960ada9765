//! Text input for polynomials in `x` with coefficients in Q(q).
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr   := ["+" | "-"] term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := atom ["^" ["-"] integer]
//! atom   := integer | "x" | "q" | "(" expr ")"
//! ```
//!
//! Division and negative exponents are allowed only for divisors that do
//! not involve `x` and are nonzero. For example `q*x^2 - (1+q)*x + 1`,
//! `x^3/2 - 1/3` and `(x - q^-1)^2`.

use crate::error::{Error, Result};
use crate::exact::{Field, QRatFunc, Rational};
use crate::poly::Poly;
use num_bigint::BigInt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        let tok = match ch {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = BigInt::from_str(&s[start..i]).expect("digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            'x' => Tok::X,
            'q' => Tok::Q,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::Open,
            ')' => Tok::Close,
            _ => {
                return Err(Error::Parse(format!(
                    "unexpected character `{ch}` at offset {i}"
                )))
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

type P = Poly<QRatFunc>;

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(o, _)| *o)
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at offset {}", self.offset())))
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<P> {
        let mut acc = if self.eat(&Tok::Minus) {
            self.term()?.neg()
        } else {
            self.eat(&Tok::Plus);
            self.term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<P> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc.mul(&self.factor()?);
            } else if self.eat(&Tok::Slash) {
                let at = self.offset();
                let d = self.factor()?;
                acc = acc.scale(&constant_inverse(&d, at)?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<P> {
        let at = self.offset();
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let negative = self.eat(&Tok::Minus);
        let e = match self.peek() {
            Some(Tok::Int(n)) => u32::try_from(n.clone())
                .or_else(|_| self.err("exponent too large"))?,
            _ => return self.err("expected an integer exponent"),
        };
        self.pos += 1;
        if negative {
            Ok(P::constant(constant_inverse(&base, at)?.pow(e as u64)))
        } else {
            Ok(base.pow(e))
        }
    }

    fn atom(&mut self) -> Result<P> {
        let tok = match self.peek() {
            Some(t) => t.clone(),
            None => return self.err("unexpected end of input"),
        };
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(P::constant(QRatFunc::from_bigint(&n))),
            Tok::X => Ok(P::x()),
            Tok::Q => Ok(P::constant(QRatFunc::q())),
            Tok::Open => {
                let v = self.expr()?;
                if !self.eat(&Tok::Close) {
                    return self.err("expected `)`");
                }
                Ok(v)
            }
            _ => {
                self.pos -= 1;
                self.err("expected a number, `x`, `q` or `(`")
            }
        }
    }
}

fn constant_inverse(p: &P, at: usize) -> Result<QRatFunc> {
    if !p.is_constant() {
        return Err(Error::Parse(format!(
            "divisor at offset {at} depends on x"
        )));
    }
    p.coeff(0)
        .inv()
        .map_err(|_| Error::Parse(format!("division by zero at offset {at}")))
}

/// Parses a polynomial in `x` over Q(q).
pub fn parse_poly(s: &str) -> Result<Poly<QRatFunc>> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        len: s.len(),
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(v)
}

/// Parses an element of Q(q) (an expression free of `x`).
pub fn parse_scalar(s: &str) -> Result<QRatFunc> {
    let p = parse_poly(s)?;
    if !p.is_constant() {
        return Err(Error::Parse(format!("`{}` depends on x", s.trim())));
    }
    Ok(p.coeff(0))
}

/// Parses a comma-separated list of elements of Q(q).
pub fn parse_scalar_list(s: &str) -> Result<Vec<QRatFunc>> {
    s.split(',').map(parse_scalar).collect()
}

/// Converts a polynomial whose coefficients are free of `q` to one over Q.
pub fn to_rational_poly(p: &Poly<QRatFunc>) -> Option<Poly<Rational>> {
    let coeffs: Option<Vec<Rational>> = p.coeffs().iter().map(rational_value).collect();
    coeffs.map(Poly::new)
}

/// The value of a constant element of Q(q), if it is free of `q`.
pub fn rational_value(c: &QRatFunc) -> Option<Rational> {
    if c.numer().is_constant() && c.denom().is_constant() {
        Some(c.numer().coeff(0).div(&c.denom().coeff(0)).ok()?)
    } else {
        None
    }
}
