//! Parser for the textual form of polynomials and rational functions.
//!
//! Accepts `+ - * / ^`, parentheses, integer literals, and juxtaposition as
//! multiplication (`4u^2(1-v)`), so fixtures can be written close to
//! ordinary mathematical notation.

use num_bigint::BigInt;

use super::{BigRat, MPoly, RatFun};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
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

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' | '\u{2212}' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Tok::Num(text.parse().expect("digits")));
            }
            a if a.is_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<RatFun> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFun> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = acc.div(&f)?;
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RatFun> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: i32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    base.pow(e)
                }
                Some(Tok::LParen) => {
                    // allow u^(10)
                    let e = match self.next() {
                        Some(Tok::Num(n)) => n,
                        _ => return Err(Error::Parse("expected integer exponent".into())),
                    };
                    if self.next() != Some(Tok::RParen) {
                        return Err(Error::Parse("expected ')'".into()));
                    }
                    let e: i32 = e
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    base.pow(e)
                }
                _ => Err(Error::Parse("expected integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RatFun> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(RatFun::from_rat(BigRat::from_integer(n))),
            Some(Tok::Ident(name)) => match self.names.iter().position(|&v| v == name) {
                Some(i) => Ok(RatFun::var(i)),
                None => Err(Error::Parse(format!(
                    "unknown variable '{name}' (expected one of {})",
                    self.names.join(", ")
                ))),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                if self.next() != Some(Tok::RParen) {
                    return Err(Error::Parse("expected ')'".into()));
                }
                Ok(e)
            }
            Some(Tok::Minus) => Ok(-self.power()?),
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parse a rational function; `names[i]` is the name of variable `i`.
pub fn parse_ratfun(s: &str, names: &[&str]) -> Result<RatFun> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        names,
    };
    let r = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(r)
}

/// Parse a polynomial; fails if the expression has a non-constant denominator.
pub fn parse_mpoly(s: &str, names: &[&str]) -> Result<MPoly> {
    let r = parse_ratfun(s, names)?;
    if !r.is_polynomial() {
        return Err(Error::Parse(format!("'{s}' is not a polynomial")));
    }
    Ok(r.num().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, UV};

    #[test]
    fn implicit_multiplication() {
        let a = parse_mpoly("16u^2(v^3+v)", &UV).unwrap();
        let b = parse_mpoly("16*u^2*v^3 + 16*u^2*v", &UV).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn precedence() {
        let a = parse_mpoly("-u^2+2*3", &UV).unwrap();
        assert_eq!(a.to_string(), "6-u^2");
        let b = parse_mpoly("3/2u", &UV).unwrap();
        assert_eq!(b, MPoly::var(0).scale(&rat::frac(3, 2)));
        assert_eq!(parse_mpoly("u^(10)", &UV).unwrap(), MPoly::var(0).pow(10));
    }

    #[test]
    fn display_round_trip() {
        let p = parse_mpoly("(1-u^2)^3(1+v)-7/3u v", &UV).unwrap();
        assert_eq!(parse_mpoly(&p.to_string(), &UV).unwrap(), p);
        let r = parse_ratfun("(1+u)/((1-u^2)(1-v))", &UV).unwrap();
        assert_eq!(parse_ratfun(&r.to_string(), &UV).unwrap(), r);
        assert_eq!(parse_ratfun(&r.fmt_factored(&UV), &UV).unwrap(), r);
    }

    #[test]
    fn errors() {
        assert!(parse_mpoly("w+1", &UV).is_err());
        assert!(parse_mpoly("(u+1", &UV).is_err());
        assert!(parse_mpoly("1/u", &UV).is_err());
        assert!(parse_mpoly("", &UV).is_err());
        assert_eq!(
            parse_ratfun("1/(u-u)", &UV).unwrap_err(),
            Error::DivisionByZero
        );
    }
}
