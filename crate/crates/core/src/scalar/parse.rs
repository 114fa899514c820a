//! Textual expression grammar for the CLI.
//!
//! Rationals `p/q` (via the division operator), coordinates as identifiers,
//! `exp(<linear form>)`, operators `+ - * / ^` with integer powers,
//! parentheses. `parse(print(f))` canonically equals `f`.

use super::{Coordinate, Scalar};
use crate::{Error, Rat, Result};
use num_bigint::BigInt;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
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

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let bytes: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        match ch {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                out.push(Tok::Int(s.parse::<BigInt>().unwrap()));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(bytes[start..i].iter().collect()));
            }
            c => return Err(Error::Parse(format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    bind: &'a BTreeMap<String, Coordinate>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: &Tok) -> Result<()> {
        match self.next() {
            Some(ref got) if got == t => Ok(()),
            other => Err(Error::Parse(format!("expected {t:?}, got {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.next();
                    let rhs = self.unary()?;
                    acc = acc.div(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            let k = self.int_exponent()?;
            return base.pow(k);
        }
        Ok(base)
    }

    fn int_exponent(&mut self) -> Result<i64> {
        let mut neg = false;
        let mut parens = false;
        if matches!(self.peek(), Some(Tok::LParen)) {
            self.next();
            parens = true;
        }
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            neg = true;
        }
        let k = match self.next() {
            Some(Tok::Int(n)) => n
                .to_string()
                .parse::<i64>()
                .map_err(|_| Error::Parse("exponent too large".into()))?,
            other => {
                return Err(Error::Parse(format!(
                    "expected integer exponent, got {other:?}"
                )))
            }
        };
        if parens {
            self.expect(&Tok::RParen)?;
        }
        Ok(if neg { -k } else { k })
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Scalar::from_rat(Rat::from(n))),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Ident(name)) if name == "exp" => {
                self.expect(&Tok::LParen)?;
                let inner = self.expr()?;
                self.expect(&Tok::RParen)?;
                let form = inner.as_linear_form().ok_or_else(|| {
                    Error::NonLinearExponent(format!(
                        "exp argument must be a rational linear form, got `{inner}`"
                    ))
                })?;
                Ok(Scalar::exp_of(&form))
            }
            Some(Tok::Ident(name)) => match self.bind.get(&name) {
                Some(c) => Ok(Scalar::coord(c)),
                None => Err(Error::UnknownCoordinate {
                    chart: "<binding>".into(),
                    name,
                }),
            },
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse an expression with identifiers bound to coordinates.
pub fn parse_scalar(src: &str, bind: &BTreeMap<String, Coordinate>) -> Result<Scalar> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, bind };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            p.toks[p.pos]
        )));
    }
    Ok(e)
}

/// Binding for a list of coordinates, keyed by coordinate name.
pub fn binding(coords: &[Coordinate]) -> BTreeMap<String, Coordinate> {
    coords.iter().map(|c| (c.name.clone(), c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::super::LinearForm;
    use super::*;
    use crate::int;

    fn bind() -> BTreeMap<String, Coordinate> {
        binding(&[
            Coordinate::new("t", "x"),
            Coordinate::new("t", "y"),
            Coordinate::new("t", "a"),
        ])
    }

    #[test]
    fn parse_basic() {
        let b = bind();
        let f = parse_scalar("2*y*(y+1) - 2*y^2", &b).unwrap();
        let y = Scalar::coord(&Coordinate::new("t", "y"));
        assert_eq!(f, y.scale(&int(2)));
    }

    #[test]
    fn parse_rationals_and_exp() {
        let b = bind();
        let f = parse_scalar("1/2 * exp(2*a) + x/y", &b).unwrap();
        let a = Coordinate::new("t", "a");
        let expect = &Scalar::exp_of(&LinearForm::single(a, int(2))).scale(&crate::rat(1, 2))
            + &Scalar::coord(&Coordinate::new("t", "x"))
                .div(&Scalar::coord(&Coordinate::new("t", "y")))
                .unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn parse_errors() {
        let b = bind();
        assert!(matches!(
            parse_scalar("w + 1", &b),
            Err(Error::UnknownCoordinate { .. })
        ));
        assert!(parse_scalar("1/(y - y)", &b).is_err());
        assert!(parse_scalar("exp(x*y)", &b).is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        let b = bind();
        let cases = [
            "2*y^2 + 1/3*x - 5",
            "(x + y)/(y^2 + 1)",
            "exp(2*a)*x - exp(-1*a)/y",
            "1/2*exp(-1/2*a) + x^3",
            "0",
        ];
        for src in cases {
            let f = parse_scalar(src, &b).unwrap();
            let printed = f.to_string();
            let g = parse_scalar(&printed, &b).unwrap();
            assert_eq!(f, g, "round trip failed for `{src}` -> `{printed}`");
        }
    }
}
