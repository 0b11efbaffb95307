use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{RationalFunction, Scalar, SymbolicScalar};
use crate::rootsys::Root;

use super::shuffle::Word;

/// Normal-ordered monomial `F_f K_k E_e`; `f` and `e` are basis words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub f: Word,
    pub k: Root,
    pub e: Word,
}

impl Mono {
    pub fn one(rank: usize) -> Self {
        Mono { f: vec![], k: Root(vec![0; rank]), e: vec![] }
    }

    pub fn is_one(&self) -> bool {
        self.f.is_empty() && self.e.is_empty() && self.k.is_zero()
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.f.iter().map(|a| format!("F{}", a + 1)).collect();
        if !self.k.is_zero() {
            parts.push(format!("K[{}]", self.k));
        }
        parts.extend(self.e.iter().map(|a| format!("E{}", a + 1)));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Finite linear combination of normal-ordered monomials.
#[derive(Clone, PartialEq, Default)]
pub struct Element<C: Scalar> {
    terms: BTreeMap<Mono, C>,
}

pub type Elem = Element<RationalFunction>;
pub type SymElem = Element<SymbolicScalar>;

impl<C: Scalar> Element<C> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn from_mono(m: Mono, c: C) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub(crate) fn from_map(mut terms: BTreeMap<Mono, C>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Element { terms }
    }

    pub fn add_term(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = slot.add(&c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        Self::from_map(self.terms.iter().map(|(m, x)| (m.clone(), x.scale(c))).collect())
    }

    pub fn scale_by(&self, c: &C) -> Self {
        Self::from_map(self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect())
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Element<D> {
        Element::from_map(self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect())
    }

    pub fn map_monos(&self, f: impl Fn(&Mono) -> Mono) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Keeps only the terms selected by the predicate.
    pub fn filter(&self, keep: impl Fn(&Mono) -> bool) -> Self {
        Element { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// The coefficient of the identity monomial.
    pub fn constant_term(&self) -> C {
        self.terms.iter().find(|(m, _)| m.is_one()).map(|(_, c)| c.clone()).unwrap_or_else(C::zero)
    }

    pub fn as_scalar(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn to_rf(&self) -> Option<Element<RationalFunction>> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.clone(), c.to_rf()?);
        }
        Some(Element { terms })
    }

    pub fn to_sym(&self) -> Element<SymbolicScalar> {
        self.map_coeffs(|c| SymbolicScalar::from_rf(c.to_rf().expect("coefficient in Q(q)")))
    }
}

impl Element<RationalFunction> {
    pub fn lift<C: Scalar>(&self) -> Element<C> {
        self.map_coeffs(|c| C::from_rf(c.clone()))
    }
}

impl Element<SymbolicScalar> {
    /// Substitutes values for the character symbols.
    pub fn substitute(&self, values: &[RationalFunction]) -> crate::Result<Element<RationalFunction>> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = c.substitute(values)?;
            if !v.is_zero() {
                terms.insert(m.clone(), v);
            }
        }
        Ok(Element { terms })
    }
}

fn needs_parens(s: &str) -> bool {
    s.trim_start_matches('-').contains([' ', '+', '-', '/', '*'])
}

impl<C: Scalar> fmt::Display for Element<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if !needs_parens(rest) => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = m.to_string();
            if body == "1" {
                write!(f, "{mono}")?;
            } else if m.is_one() {
                if needs_parens(&body) {
                    write!(f, "({body})")?;
                } else {
                    write!(f, "{body}")?;
                }
            } else if needs_parens(&body) {
                write!(f, "({body}) {mono}")?;
            } else {
                write!(f, "{body} {mono}")?;
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for Element<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
