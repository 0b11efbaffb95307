//! Finite root systems, Weyl group words and inversion sets.

mod group;
mod root;
mod weyl;

pub use group::{WeylGroup, WeylGroupEntry};
pub use root::{parse_root, Root};
pub use weyl::{parse_word, WeylElement, WeylWord};

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::G => "G",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "G" => Ok(CartanType::G),
            other => Err(Error::InvalidRootSystem(format!("unknown type {other:?}"))),
        }
    }
}

/// A finite root system given by its symmetrized bilinear form on the
/// simple roots. Short roots have square length 2.
#[derive(Clone)]
pub struct RootSystem {
    ty: CartanType,
    rank: usize,
    form: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({}{})", self.ty, self.rank)
    }
}

impl RootSystem {
    pub fn new(ty: CartanType, rank: usize) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidRootSystem(format!("{ty}{rank}: {msg}")));
        let n = rank;
        let mut form = vec![vec![0i64; n]; n];
        match ty {
            CartanType::A => {
                if n < 1 {
                    return bad("rank must be at least 1");
                }
                for i in 0..n {
                    form[i][i] = 2;
                    if i + 1 < n {
                        form[i][i + 1] = -1;
                        form[i + 1][i] = -1;
                    }
                }
            }
            CartanType::B => {
                if n < 2 {
                    return bad("rank must be at least 2");
                }
                for i in 0..n {
                    form[i][i] = if i + 1 < n { 4 } else { 2 };
                    if i + 1 < n {
                        form[i][i + 1] = -2;
                        form[i + 1][i] = -2;
                    }
                }
            }
            CartanType::C => {
                if n < 2 {
                    return bad("rank must be at least 2");
                }
                for i in 0..n {
                    form[i][i] = if i + 1 < n { 2 } else { 4 };
                    if i + 1 < n {
                        let v = if i + 2 == n { -2 } else { -1 };
                        form[i][i + 1] = v;
                        form[i + 1][i] = v;
                    }
                }
            }
            CartanType::D => {
                if n < 4 {
                    return bad("rank must be at least 4");
                }
                for i in 0..n {
                    form[i][i] = 2;
                }
                for i in 0..n - 2 {
                    form[i][i + 1] = -1;
                    form[i + 1][i] = -1;
                }
                form[n - 3][n - 1] = -1;
                form[n - 1][n - 3] = -1;
            }
            CartanType::G => {
                if n != 2 {
                    return bad("rank must be 2");
                }
                form = vec![vec![2, -3], vec![-3, 6]];
            }
        }
        let cartan = (0..n).map(|i| (0..n).map(|j| 2 * form[i][j] / form[i][i]).collect()).collect();
        let mut rs = RootSystem { ty, rank: n, form, cartan, positive: Vec::new(), index: HashMap::new() };
        rs.positive = rs.close_positive_roots();
        rs.index = rs.positive.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let expected = match ty {
            CartanType::A => n * (n + 1) / 2,
            CartanType::B | CartanType::C => n * n,
            CartanType::D => n * (n - 1),
            CartanType::G => 6,
        };
        if rs.positive.len() != expected {
            return Err(Error::Internal(format!("{ty}{n}: found {} positive roots", rs.positive.len())));
        }
        Ok(rs)
    }

    /// Shorthand for type A of the given rank.
    pub fn a(n: usize) -> Self {
        Self::new(CartanType::A, n).expect("type A of positive rank")
    }

    fn close_positive_roots(&self) -> Vec<Root> {
        let mut seen: Vec<Root> = (0..self.rank).map(|i| self.simple(i)).collect();
        let mut frontier = seen.clone();
        while let Some(r) = frontier.pop() {
            for i in 0..self.rank {
                let s = self.reflect(i, &r);
                if s.is_positive() && !seen.contains(&s) {
                    seen.push(s.clone());
                    frontier.push(s);
                }
            }
        }
        seen.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
        seen
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.ty, self.rank)
    }

    pub fn form_matrix(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots ordered by height.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r) || self.index.contains_key(&r.neg())
    }

    pub fn simple(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        Root(v)
    }

    pub fn zero_root(&self) -> Root {
        Root(vec![0; self.rank])
    }

    /// Index of a simple root, if `r` is one.
    pub fn simple_index(&self, r: &Root) -> Option<usize> {
        let mut idx = None;
        for (i, &c) in r.0.iter().enumerate() {
            match c {
                0 => {}
                1 if idx.is_none() => idx = Some(i),
                _ => return None,
            }
        }
        idx
    }

    /// The symmetric bilinear form `(mu, nu)`.
    pub fn pairing(&self, mu: &Root, nu: &Root) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if mu.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += mu.0[i] * self.form[i][j] * nu.0[j];
            }
        }
        s
    }

    /// `(alpha_i, alpha_i) / 2`, the exponent `d_i` with `q_i = q^{d_i}`.
    pub fn d(&self, i: usize) -> i64 {
        self.form[i][i] / 2
    }

    pub fn reflect(&self, i: usize, r: &Root) -> Root {
        let p: i64 = (0..self.rank).map(|j| self.form[i][j] * r.0[j]).sum();
        let c = 2 * p / self.form[i][i];
        let mut v = r.0.clone();
        v[i] -= c;
        Root(v)
    }

    /// Reflection in an arbitrary root.
    pub fn reflect_in(&self, beta: &Root, r: &Root) -> Root {
        let c = 2 * self.pairing(beta, r) / self.pairing(beta, beta);
        r.sub(&beta.scale(c))
    }

    /// Interval form `[i, j]` (1-based) of a type A root.
    pub fn interval(&self, r: &Root) -> Option<(usize, usize)> {
        if self.ty != CartanType::A {
            return None;
        }
        r.interval()
    }

    pub fn format_root(&self, r: &Root) -> String {
        r.to_string()
    }

    /// Strongly orthogonal test for orthogonal roots: no nonzero rational
    /// combination `m mu + n nu` other than the trivial ones is a root.
    pub fn strongly_orthogonal(&self, mu: &Root, nu: &Root) -> Result<bool> {
        if self.pairing(mu, nu) != 0 {
            return Err(Error::NotOrthogonal(mu.to_string(), nu.to_string()));
        }
        let mm = self.pairing(mu, mu);
        let nn = self.pairing(nu, nu);
        for g in &self.positive {
            // orthogonality makes the coefficients unique when they exist
            let a = self.pairing(g, mu);
            let b = self.pairing(g, nu);
            if a == 0 || b == 0 {
                continue;
            }
            // g = (a/mm) mu + (b/nn) nu, checked without division
            let lhs = g.scale(mm * nn);
            let rhs = mu.scale(a * nn).add(&nu.scale(b * mm));
            if lhs == rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        assert_eq!(RootSystem::new(CartanType::A, 2).unwrap().num_positive(), 3);
        assert_eq!(RootSystem::new(CartanType::A, 3).unwrap().num_positive(), 6);
        assert_eq!(RootSystem::new(CartanType::G, 2).unwrap().num_positive(), 6);
        assert_eq!(RootSystem::new(CartanType::B, 3).unwrap().num_positive(), 9);
        assert_eq!(RootSystem::new(CartanType::C, 3).unwrap().num_positive(), 9);
        assert_eq!(RootSystem::new(CartanType::D, 4).unwrap().num_positive(), 12);
    }

    #[test]
    fn invalid_ranks() {
        assert!(RootSystem::new(CartanType::G, 3).is_err());
        assert!(RootSystem::new(CartanType::A, 0).is_err());
        assert!(RootSystem::new(CartanType::B, 1).is_err());
    }

    #[test]
    fn cartan_matrix_from_form() {
        let b2 = RootSystem::new(CartanType::B, 2).unwrap();
        assert_eq!(b2.cartan_matrix(), &[vec![2, -1], vec![-2, 2]]);
        let g2 = RootSystem::new(CartanType::G, 2).unwrap();
        assert_eq!(g2.cartan_matrix(), &[vec![2, -3], vec![-1, 2]]);
    }

    #[test]
    fn pairings() {
        let a2 = RootSystem::a(2);
        assert_eq!(a2.pairing(&a2.simple(0), &a2.simple(1)), -1);
        let a3 = RootSystem::a(3);
        let r12 = parse_root(&a3, "[1,2]").unwrap();
        let r23 = parse_root(&a3, "[2,3]").unwrap();
        // bilinear expansion: -1 + 0 + 2 - 1
        assert_eq!(a3.pairing(&r12, &r23), 0);
        assert_eq!(a3.pairing(&r12, &a3.simple(1)), 1);
        for r in a3.positive_roots() {
            assert_eq!(a3.pairing(r, r), 2);
        }
    }

    #[test]
    fn g2_has_an_orthogonal_pair_that_is_not_strongly_orthogonal() {
        let g2 = RootSystem::new(CartanType::G, 2).unwrap();
        let roots = g2.positive_roots();
        let mut found = false;
        for a in roots {
            for b in roots {
                if g2.pairing(a, a) == 6 && g2.pairing(b, b) == 2 && g2.pairing(a, b) == 0 {
                    assert!(!g2.strongly_orthogonal(a, b).unwrap());
                    found = true;
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn b2_orthogonal_short_long_pair() {
        let b2 = RootSystem::new(CartanType::B, 2).unwrap();
        // e1 - e2 = a1 and e1 + e2 = a1 + 2 a2
        let mu = Root(vec![1, 0]);
        let nu = Root(vec![1, 2]);
        assert!(!b2.strongly_orthogonal(&mu, &nu).unwrap());
        let a3 = RootSystem::a(3);
        assert!(a3.strongly_orthogonal(&a3.simple(0), &a3.simple(2)).unwrap());
        assert!(a3.strongly_orthogonal(&a3.simple(0), &a3.simple(1)).is_err());
    }

    #[test]
    fn every_nonsimple_root_has_a_simple_predecessor() {
        for (t, n) in [(CartanType::A, 4), (CartanType::B, 3), (CartanType::C, 3), (CartanType::D, 4), (CartanType::G, 2)] {
            let rs = RootSystem::new(t, n).unwrap();
            for mu in rs.positive_roots() {
                if rs.simple_index(mu).is_some() {
                    continue;
                }
                let ok = (0..n).any(|i| {
                    let d = mu.sub(&rs.simple(i));
                    rs.root_index(&d).is_some()
                });
                assert!(ok, "{t}{n} {mu}");
            }
        }
    }
}
