use std::fmt;

use serde::{Deserialize, Serialize};

use super::RootSystem;
use crate::error::{Error, Result};

/// Element of the root lattice in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: i64) -> Root {
        Root(self.0.iter().map(|a| a * c).collect())
    }

    /// Strict comparison in every coordinate.
    pub fn strictly_below(&self, o: &Root) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a < b)
    }

    /// Componentwise `<=`.
    pub fn weakly_below(&self, o: &Root) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// 1-based interval `[i, j]` when the coordinates are a 0/1 interval.
    pub fn interval(&self) -> Option<(usize, usize)> {
        let nz: Vec<usize> = self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect();
        let (&a, &b) = (nz.first()?, nz.last()?);
        if b - a + 1 != nz.len() || nz.iter().any(|&i| self.0[i] != 1) {
            return None;
        }
        Some((a + 1, b + 1))
    }

    /// Compact label such as `12` for `a1+a2`, used in generator names.
    pub fn index_label(&self) -> String {
        let mut s = String::new();
        for (i, &c) in self.0.iter().enumerate() {
            for _ in 0..c.max(0) {
                s.push_str(&(i + 1).to_string());
            }
        }
        s
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parse `[i,j]`, `(c1,...,cn)` or `a1+2a2` into a lattice element.
pub fn parse_root(rs: &RootSystem, s: &str) -> Result<Root> {
    let s = s.trim();
    let n = rs.rank();
    let err = || Error::Parse(format!("bad root literal {s:?}"));
    if let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(err());
        }
        let i: usize = parts[0].parse().map_err(|_| err())?;
        let j: usize = parts[1].parse().map_err(|_| err())?;
        if i < 1 || i > j || j > n {
            return Err(err());
        }
        let mut v = vec![0; n];
        for c in v.iter_mut().take(j).skip(i - 1) {
            *c = 1;
        }
        return Ok(Root(v));
    }
    if let Some(body) = s.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
        let v: Vec<i64> = body.split(',').map(|p| p.trim().parse().map_err(|_| err())).collect::<Result<_>>()?;
        if v.len() != n {
            return Err(err());
        }
        return Ok(Root(v));
    }
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "0" {
        return Ok(Root(vec![0; n]));
    }
    let mut v = vec![0i64; n];
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let sign = if let Some(r) = rest.strip_prefix('-') {
            rest = r;
            -1
        } else {
            rest = rest.strip_prefix('+').unwrap_or(rest);
            1
        };
        let digits = rest.chars().take_while(|c| c.is_ascii_digit()).count();
        let coef: i64 = if digits == 0 { 1 } else { rest[..digits].parse().map_err(|_| err())? };
        rest = &rest[digits..];
        rest = rest.strip_prefix('a').ok_or_else(err)?;
        let d = rest.chars().take_while(|c| c.is_ascii_digit()).count();
        let idx: usize = rest[..d].parse().map_err(|_| err())?;
        rest = &rest[d..];
        if idx < 1 || idx > n {
            return Err(err());
        }
        v[idx - 1] += sign * coef;
    }
    Ok(Root(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        let rs = RootSystem::a(3);
        assert_eq!(parse_root(&rs, "[2,3]").unwrap(), Root(vec![0, 1, 1]));
        assert_eq!(parse_root(&rs, "(1,2,0)").unwrap(), Root(vec![1, 2, 0]));
        assert_eq!(parse_root(&rs, "a1+2a2").unwrap(), Root(vec![1, 2, 0]));
        assert_eq!(parse_root(&rs, "-a1+a3").unwrap(), Root(vec![-1, 0, 1]));
        assert!(parse_root(&rs, "[3,1]").is_err());
        assert!(parse_root(&rs, "a4").is_err());
    }

    #[test]
    fn display_and_interval() {
        let r = Root(vec![1, 2, 0]);
        assert_eq!(r.to_string(), "a1+2a2");
        assert_eq!(Root(vec![0, 1, 1]).interval(), Some((2, 3)));
        assert_eq!(r.interval(), None);
        assert_eq!(Root(vec![-1, 0, 1]).to_string(), "-a1+a3");
    }

    #[test]
    fn comparisons() {
        let a = Root(vec![1, 0]);
        let b = Root(vec![1, 1]);
        assert!(a.weakly_below(&b));
        assert!(!a.strictly_below(&b));
        assert!(Root(vec![0, 0]).strictly_below(&b));
    }
}
