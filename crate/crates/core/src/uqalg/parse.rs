//! Element literals: `E1 E2 - (q^-1) E2 E1`, `F1 K[a1+a2]`, `K1^-1 E2`,
//! `(1 - q^-2)*lam1 E2 K[-a2]`. Juxtaposition and `*` both multiply.

use num_bigint::BigInt;

use crate::coeff::{RationalFunction, SymbolicScalar};
use crate::error::{Error, Result};
use crate::rootsys::{parse_root, Root};

use super::{SymElem, UqAlgebra};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Q,
    Lam(usize),
    E(usize),
    F(usize),
    K(Root),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn read_index(cs: &[char], i: &mut usize, src: &str) -> Result<usize> {
    let st = *i;
    while *i < cs.len() && cs[*i].is_ascii_digit() {
        *i += 1;
    }
    if st == *i {
        return Err(Error::Parse(format!("missing generator index in {src:?}")));
    }
    cs[st..*i].iter().collect::<String>().parse().map_err(|_| Error::Parse(src.into()))
}

fn tokenize(alg: &UqAlgebra, s: &str) -> Result<Vec<Tok>> {
    let rank = alg.rank();
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let gen_index = |idx: usize| -> Result<usize> {
        if idx == 0 || idx > rank {
            Err(Error::Parse(format!("generator index {idx} out of range 1..={rank}")))
        } else {
            Ok(idx - 1)
        }
    };
    while i < cs.len() {
        match cs[i] {
            c if c.is_whitespace() => i += 1,
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
                if cs[i..].iter().take(3).collect::<String>() != "lam" {
                    return Err(Error::Parse(format!("unexpected identifier at {i} in {s:?}")));
                }
                i += 3;
                let idx = if i < cs.len() && cs[i].is_ascii_digit() { read_index(&cs, &mut i, s)? } else { 1 };
                if idx == 0 {
                    return Err(Error::Parse("symbols are numbered from 1".into()));
                }
                out.push(Tok::Lam(idx));
            }
            'E' => {
                i += 1;
                out.push(Tok::E(gen_index(read_index(&cs, &mut i, s)?)?));
            }
            'F' => {
                i += 1;
                out.push(Tok::F(gen_index(read_index(&cs, &mut i, s)?)?));
            }
            'K' => {
                i += 1;
                if i < cs.len() && (cs[i] == '[' || cs[i] == '(') {
                    let close = if cs[i] == '[' { ']' } else { ')' };
                    let st = i;
                    while i < cs.len() && cs[i] != close {
                        i += 1;
                    }
                    if i == cs.len() {
                        return Err(Error::Parse(format!("unterminated K literal in {s:?}")));
                    }
                    i += 1;
                    let lit: String = cs[st..i].iter().collect();
                    let body = &lit[1..lit.len() - 1];
                    let root = if close == ']' && !body.contains(',') {
                        parse_root(alg.root_system(), body)?
                    } else {
                        parse_root(alg.root_system(), &lit)?
                    };
                    out.push(Tok::K(root));
                } else {
                    let j = gen_index(read_index(&cs, &mut i, s)?)?;
                    out.push(Tok::K(alg.root_system().simple(j)));
                }
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
            c => return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    alg: &'a UqAlgebra,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at token {}", self.pos))
    }

    fn expr(&mut self) -> Result<SymElem> {
        let mut acc = SymElem::zero();
        let mut sign = 1;
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            sign = -1;
        } else if let Some(Tok::Plus) = self.peek() {
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) };
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_) | Tok::Q | Tok::Lam(_) | Tok::E(_) | Tok::F(_) | Tok::K(_) | Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<SymElem> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let r = self.power()?;
                    acc = self.alg.mul(&acc, &r);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let r = self.power()?;
                    let inv = self.invert(&r)?;
                    acc = self.alg.mul(&acc, &inv);
                }
                _ if self.starts_factor() => {
                    let r = self.power()?;
                    acc = self.alg.mul(&acc, &r);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn invert(&self, x: &SymElem) -> Result<SymElem> {
        if x.len() == 1 {
            let (m, c) = x.terms().next().unwrap();
            if m.f.is_empty() && m.e.is_empty() {
                let mut m2 = m.clone();
                m2.k = m.k.neg();
                return Ok(SymElem::from_mono(m2, c.inv()?));
            }
        }
        Err(self.err("only scalars and K elements can be inverted"))
    }

    fn power(&mut self) -> Result<SymElem> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let e = self.exponent()?;
            let b = if e < 0 { self.invert(&base)? } else { base };
            return Ok(self.alg.pow(&b, e.unsigned_abs() as u32));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let mut paren = false;
        if let Some(Tok::LParen) = self.peek() {
            paren = true;
            self.pos += 1;
        }
        let mut sign = 1;
        if let Some(Tok::Minus) = self.peek() {
            sign = -1;
            self.pos += 1;
        }
        let v = match self.peek() {
            Some(Tok::Num(n)) => n.to_string().parse::<i64>().map_err(|_| self.err("exponent too large"))?,
            _ => return Err(self.err("expected an integer exponent")),
        };
        self.pos += 1;
        if paren {
            if self.peek() != Some(&Tok::RParen) {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
        }
        if v > 64 {
            return Err(self.err("exponent too large"));
        }
        Ok(sign * v)
    }

    fn atom(&mut self) -> Result<SymElem> {
        let alg = self.alg;
        let t = self.peek().cloned().ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        Ok(match t {
            Tok::Num(n) => alg.scalar(SymbolicScalar::from_rf(RationalFunction::from_rational(n.into()))),
            Tok::Q => alg.scalar(SymbolicScalar::from_rf(RationalFunction::q())),
            Tok::Lam(j) => alg.scalar(SymbolicScalar::lam(j)),
            Tok::E(i) => alg.e(i),
            Tok::F(i) => alg.f(i),
            Tok::K(r) => alg.k(&r),
            Tok::LParen => {
                let x = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                x
            }
            Tok::Minus => self.power()?.neg(),
            _ => return Err(self.err("unexpected token")),
        })
    }
}

pub(super) fn parse_element(alg: &UqAlgebra, s: &str) -> Result<SymElem> {
    let toks = tokenize(alg, s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty element literal".into()));
    }
    let mut p = Parser { alg, toks, pos: 0 };
    let x = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uqalg::Elem;

    #[test]
    fn generators_and_k() {
        let a = UqAlgebra::sl(3).unwrap();
        let x = a.parse("K1^-1").unwrap();
        assert_eq!(x, a.k_simple(0, -1));
        assert_eq!(a.parse("K[a1+a2]").unwrap(), a.k(&Root(vec![1, 1])));
        assert_eq!(a.parse("K[1,2]").unwrap(), a.k(&Root(vec![1, 1])));
        assert_eq!(a.parse("K(1,-1)").unwrap(), a.k(&Root(vec![1, -1])));
        assert!(a.parse("E3").is_err());
        assert!(a.parse("E1 +").is_err());
        assert!(a.parse("lam1 E1").is_err());
        assert!(a.parse_sym("lam1 E1").is_ok());
    }

    #[test]
    fn display_round_trip() {
        let a = UqAlgebra::sl(3).unwrap();
        let x = a.parse("E2 E1 + (q^2 - 1)/(q) F1 K[a1-a2] E2 - 3 F2 F1 + 7/2").unwrap();
        let s = x.to_string();
        let y: Elem = a.parse(&s).unwrap();
        assert_eq!(x, y, "{s}");
        let z = a.parse_sym("(1 - q^-2)*lam1 E2 K[-a2] - lam2 F1").unwrap();
        assert_eq!(a.parse_sym(&z.to_string()).unwrap(), z);
    }

    #[test]
    fn scalar_division() {
        let a = UqAlgebra::sl(2).unwrap();
        let x = a.parse("E1 / (q - q^-1)").unwrap();
        assert_eq!(x, a.e::<RationalFunction>(0).scale(&crate::coeff::q_diff(1).inv().unwrap()));
    }
}
