//! Parser for scalar literals such as `q^2/((1 - q^2)*(q - q^-1))` or
//! `(1 - q^-2)*lam1`.

use num_bigint::BigInt;

use super::ratfunc::RationalFunction;
use super::symbolic::SymbolicScalar;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Q,
    Lam(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        match c {
            ' ' | '\t' | '\n' => {
                i += 1;
            }
            '0'..='9' => {
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let t: String = cs[st..i].iter().collect();
                out.push(Tok::Num(t.parse().map_err(|_| Error::Parse(t.clone()))?));
            }
            'q' => {
                out.push(Tok::Q);
                i += 1;
            }
            'l' => {
                let rest: String = cs[i..].iter().take(3).collect();
                if rest != "lam" {
                    return Err(Error::Parse(format!("unexpected identifier at {i} in {s:?}")));
                }
                i += 3;
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let idx = if st == i {
                    1
                } else {
                    cs[st..i].iter().collect::<String>().parse().map_err(|_| Error::Parse(s.into()))?
                };
                if idx == 0 {
                    return Err(Error::Parse("symbols are numbered from 1".into()));
                }
                out.push(Tok::Lam(idx));
            }
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
            _ => return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<SymbolicScalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SymbolicScalar> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = divide(&acc, &d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<SymbolicScalar> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<SymbolicScalar> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let paren = self.peek() == Some(&Tok::LParen);
        if paren {
            self.pos += 1;
        }
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let e: i32 = match self.next() {
            Some(Tok::Num(n)) => n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?,
            t => return Err(Error::Parse(format!("expected exponent, found {t:?}"))),
        };
        if paren && self.next() != Some(Tok::RParen) {
            return Err(Error::Parse("unclosed exponent".into()));
        }
        let e = if neg { -e } else { e };
        let b = if e < 0 { base.inv()? } else { base };
        let mut out = SymbolicScalar::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&b);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<SymbolicScalar> {
        match self.next() {
            Some(Tok::Num(n)) => {
                let v: i64 = n.try_into().map_err(|_| Error::Parse("integer literal too large".into()))?;
                Ok(SymbolicScalar::from_rf(RationalFunction::from_int(v)))
            }
            Some(Tok::Q) => Ok(SymbolicScalar::from_rf(RationalFunction::q())),
            Some(Tok::Lam(j)) => Ok(SymbolicScalar::lam(j)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                if self.next() != Some(Tok::RParen) {
                    return Err(Error::Parse("missing closing parenthesis".into()));
                }
                Ok(e)
            }
            t => Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

fn divide(a: &SymbolicScalar, d: &SymbolicScalar) -> Result<SymbolicScalar> {
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if let Some(r) = d.as_rf() {
        return Ok(a.scale(&r.inv()?));
    }
    Ok(a.mul(&d.inv()?))
}

pub fn parse_symbolic(s: &str) -> Result<SymbolicScalar> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0 };
    if p.toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(v)
}

pub fn parse_rf(s: &str) -> Result<RationalFunction> {
    parse_symbolic(s)?.as_rf().ok_or_else(|| Error::Parse(format!("{s:?} contains a symbol")))
}

impl std::str::FromStr for RationalFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_rf(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::ratfunc::{q_diff, q_number};

    #[test]
    fn parses_quantum_number() {
        assert_eq!(parse_rf("q + q^-1").unwrap(), q_number(2, 1));
        assert_eq!(parse_rf("(q^2 - q^-2)/(q - q^(-1))").unwrap(), q_number(2, 1));
    }

    #[test]
    fn round_trips_display() {
        let x = &RationalFunction::q_pow(2) / &q_diff(1);
        assert_eq!(parse_rf(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn parses_symbols() {
        let s = parse_symbolic("(1 - q^-2)*lam1 + lam2^-1").unwrap();
        assert_eq!(s.components().len(), 2);
        assert!(parse_rf("lam").is_err());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rf("q +").is_err());
        assert!(parse_rf("x").is_err());
        assert!(parse_rf("1/0").is_err());
    }
}
