//! Text syntax for polynomials and exact scalars.
//!
//! Variables are ring names (`z1`, `zb1`, `a1_2`, ...); coefficients are
//! integers, rationals `p/q` and the imaginary unit `I`; operators are
//! `+ - * / ^` with parentheses. Division is only allowed by a nonzero
//! constant. [`format_polynomial`] emits text that parses back to the same
//! polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Coeff, Polynomial};
use crate::ring::{Ring, RingContext, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn next(&mut self) -> Result<(usize, Tok), ParseError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        if self.pos >= bytes.len() {
            return Ok((start, Tok::End));
        }
        let c = bytes[self.pos];
        if c.is_ascii_digit() {
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let n: BigInt = self.src[start..self.pos].parse().expect("digits");
            return Ok((start, Tok::Num(n)));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while self.pos < bytes.len()
                && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
            {
                self.pos += 1;
            }
            return Ok((start, Tok::Ident(self.src[start..self.pos].to_string())));
        }
        if b"+-*/^()".contains(&c) {
            self.pos += 1;
            return Ok((start, Tok::Op(c as char)));
        }
        let ch = self.src[start..].chars().next().unwrap_or('?');
        Err(ParseError {
            position: start,
            message: format!("unexpected character `{ch}`"),
        })
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    lexer: Lexer<'a>,
    tok: Tok,
    tok_pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Ring, src: &'a str) -> Result<Self, ParseError> {
        let mut lexer = Lexer { src, pos: 0 };
        let (tok_pos, tok) = lexer.next()?;
        Ok(Self {
            ring,
            lexer,
            tok,
            tok_pos,
        })
    }

    fn bump(&mut self) -> Result<(), ParseError> {
        let (p, t) = self.lexer.next()?;
        self.tok = t;
        self.tok_pos = p;
        Ok(())
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.tok_pos,
            message: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.tok {
                Tok::Op('+') => {
                    self.bump()?;
                    acc = &acc + &self.term()?;
                }
                Tok::Op('-') => {
                    self.bump()?;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.tok {
                Tok::Op('*') => {
                    self.bump()?;
                    acc = &acc * &self.unary()?;
                }
                Tok::Op('/') => {
                    self.bump()?;
                    let pos = self.tok_pos;
                    let d = self.unary()?;
                    let inv = d.as_constant().and_then(|c| c.inv()).ok_or(ParseError {
                        position: pos,
                        message: "division only by a nonzero constant".into(),
                    })?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.tok {
            Tok::Op('-') => {
                self.bump()?;
                Ok(-self.unary()?)
            }
            Tok::Op('+') => {
                self.bump()?;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.tok == Tok::Op('^') {
            self.bump()?;
            let e = match &self.tok {
                Tok::Num(n) => match u32::try_from(n.clone()) {
                    Ok(e) => e,
                    Err(_) => return self.err("exponent too large"),
                },
                _ => return self.err("expected a non-negative integer exponent"),
            };
            self.bump()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.tok.clone() {
            Tok::Num(n) => {
                self.bump()?;
                Ok(Polynomial::constant(
                    self.ring,
                    Coeff::real(BigRational::from_integer(n)),
                ))
            }
            Tok::Ident(name) => {
                if name == "I" {
                    self.bump()?;
                    return Ok(Polynomial::constant(self.ring, Coeff::i()));
                }
                match self.ring.var(&name) {
                    Some(v) => {
                        self.bump()?;
                        Ok(Polynomial::var(self.ring, v))
                    }
                    None => self.err(format!("unknown variable `{name}`")),
                }
            }
            Tok::Op('(') => {
                self.bump()?;
                let inner = self.expr()?;
                if self.tok != Tok::Op(')') {
                    return self.err("expected `)`");
                }
                self.bump()?;
                Ok(inner)
            }
            Tok::End => self.err("unexpected end of input"),
            Tok::Op(c) => self.err(format!("unexpected `{c}`")),
        }
    }
}

pub fn parse_polynomial(ring: &Ring, src: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser::new(ring, src)?;
    let out = p.expr()?;
    if p.tok != Tok::End {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses a constant expression such as `3/5`, `-I` or `1/2 + 2*I`.
pub fn parse_scalar(src: &str) -> Result<Coeff, ParseError> {
    let ring = RingContext::plain(&[]).expect("empty ring");
    let p = parse_polynomial(&ring, src)?;
    Ok(p.as_constant().expect("no variables in an empty ring"))
}

fn format_monomial(ring: &RingContext, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for i in m.support() {
        let name = ring.name(Var(i));
        match m.exponent(i) {
            1 => parts.push(name.to_string()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Canonical text: terms in descending graded reverse lex order.
pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| MonomialOrder::GrevLex.cmp(b.0, a.0));
    let mut out = String::new();
    for (k, (m, c)) in terms.into_iter().enumerate() {
        let mono = format_monomial(p.ring(), m);
        // Real or purely imaginary coefficients carry their sign outside.
        let negative = if c.is_real() {
            c.re() < &BigRational::zero()
        } else if c.is_imaginary() {
            c.im() < &BigRational::zero()
        } else {
            false
        };
        let mag = if negative { -c } else { c.clone() };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&mag.to_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let r = RingContext::manifold(2);
        let p = parse_polynomial(&r, "z1*zb1 + z2*zb2 - 1").unwrap();
        assert_eq!(format_polynomial(&p), "z1*zb1 + z2*zb2 - 1");
        let q = parse_polynomial(&r, "I*(z1 - zb1)/2 + (1+I)*z2^2").unwrap();
        let back = parse_polynomial(&r, &format_polynomial(&q)).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("3/5").unwrap(), Coeff::ratio(3, 5));
        assert_eq!(parse_scalar("-I").unwrap(), Coeff::from_integers(0, -1));
        assert_eq!(parse_scalar("1/2 + 2*I").unwrap().to_string(), "(1/2+2*I)");
    }

    #[test]
    fn error_positions() {
        let r = RingContext::manifold(1);
        let e = parse_polynomial(&r, "z1 + * zb1").unwrap_err();
        assert_eq!(e.position, 5);
        let e = parse_polynomial(&r, "z1 + w").unwrap_err();
        assert_eq!(e.position, 5);
        assert!(e.message.contains("unknown variable"));
        let e = parse_polynomial(&r, "z1 / z1").unwrap_err();
        assert_eq!(e.position, 5);
        let e = parse_polynomial(&r, "(z1").unwrap_err();
        assert_eq!(e.position, 3);
        let e = parse_polynomial(&r, "z1 $").unwrap_err();
        assert_eq!(e.position, 3);
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let r = RingContext::manifold(1);
        let p = parse_polynomial(&r, "-z1^2").unwrap();
        assert_eq!(format_polynomial(&p), "-z1^2");
        let p = parse_polynomial(&r, "-3/4*I*z1 + 0").unwrap();
        assert_eq!(format_polynomial(&p), "-3/4*I*z1");
    }
}
