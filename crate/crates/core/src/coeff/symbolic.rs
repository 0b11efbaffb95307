use std::collections::BTreeMap;
use std::fmt;

use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// Laurent polynomial in commuting symbols `lam1, lam2, ...` with
/// coefficients in Q(q).
///
/// Keys are exponent vectors with trailing zeros trimmed, so the constant
/// term has the empty key.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymbolicScalar {
    terms: BTreeMap<Vec<i32>, RationalFunction>,
}

fn trim(mut v: Vec<i32>) -> Vec<i32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn add_exps(a: &[i32], b: &[i32]) -> Vec<i32> {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect())
}

impl SymbolicScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rf(RationalFunction::one())
    }

    pub fn from_rf(c: RationalFunction) -> Self {
        Self::term(c, vec![])
    }

    pub fn term(c: RationalFunction, exps: Vec<i32>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exps), c);
        }
        SymbolicScalar { terms }
    }

    /// The symbol `lam_j` (1-based index).
    pub fn lam(j: usize) -> Self {
        Self::lam_pow(j, 1)
    }

    pub fn lam_pow(j: usize, e: i32) -> Self {
        assert!(j >= 1);
        let mut v = vec![0; j];
        v[j - 1] = e;
        Self::term(RationalFunction::one(), v)
    }

    /// `c * lam_j^{-1}`: the partner value whose product with `lam_j` is `c`.
    pub fn lam_partner(j: usize, c: &RationalFunction) -> Self {
        Self::lam_pow(j, -1).scale(c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn num_symbols(&self) -> usize {
        self.terms.keys().map(|k| k.len()).max().unwrap_or(0)
    }

    /// The value as an element of Q(q) when no symbol occurs.
    pub fn as_rf(&self) -> Option<RationalFunction> {
        match self.terms.len() {
            0 => Some(RationalFunction::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            let e = out.terms.entry(k.clone()).or_default();
            *e = &*e + c;
            if e.is_zero() {
                out.terms.remove(k);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        SymbolicScalar { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &o.terms {
                out = out.add(&Self::term(ca * cb, add_exps(ka, kb)));
            }
        }
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SymbolicScalar { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Inverse of a single-term scalar.
    pub fn inv(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::InvalidArgument(format!("cannot invert {self}")));
        }
        let (k, c) = self.terms.iter().next().unwrap();
        Ok(Self::term(c.inv()?, k.iter().map(|e| -e).collect()))
    }

    /// Replace every symbol `lam_j` by `values[j-1]`.
    pub fn substitute(&self, values: &[RationalFunction]) -> Result<RationalFunction> {
        let mut acc = RationalFunction::zero();
        for (k, c) in &self.terms {
            let mut t = c.clone();
            for (j, &e) in k.iter().enumerate() {
                if e != 0 {
                    let v = values
                        .get(j)
                        .ok_or_else(|| Error::InvalidArgument(format!("no value for lam{}", j + 1)))?;
                    t = &t * &v.pow(e)?;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Split into the coefficient of every symbol monomial.
    pub fn components(&self) -> &BTreeMap<Vec<i32>, RationalFunction> {
        &self.terms
    }
}

fn monomial_name(k: &[i32]) -> String {
    let mut parts = Vec::new();
    for (j, &e) in k.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("lam{}", j + 1)),
            _ => parts.push(format!("lam{}^{}", j + 1, e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for SymbolicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let m = monomial_name(k);
            if m.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&m)?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymbolicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sym({self})")
    }
}

impl From<RationalFunction> for SymbolicScalar {
    fn from(c: RationalFunction) -> Self {
        Self::from_rf(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::ratfunc::q_number;

    #[test]
    fn symbol_times_partner_is_constant() {
        let c = q_number(2, 1);
        let p = SymbolicScalar::lam(1).mul(&SymbolicScalar::lam_partner(1, &c));
        assert_eq!(p.as_rf(), Some(c));
    }

    #[test]
    fn independent_symbols_do_not_merge() {
        let a = SymbolicScalar::lam(1).add(&SymbolicScalar::lam(2));
        assert_eq!(a.components().len(), 2);
        assert_eq!(a.as_rf(), None);
        assert_eq!(a.to_string(), "lam1 + lam2");
    }

    #[test]
    fn substitution() {
        let a = SymbolicScalar::lam_pow(1, 2).scale(&RationalFunction::q());
        let v = a.substitute(&[RationalFunction::from_int(3)]).unwrap();
        assert_eq!(v, RationalFunction::q().scale(&crate::coeff::rational(9, 1)));
    }
}
