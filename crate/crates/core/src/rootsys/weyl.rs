use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Root, RootSystem};
use crate::error::{Error, Result};

/// A word in the simple reflections, stored with 0-based indices and
/// printed 1-based as `s1 s2`.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, o: &WeylWord) -> WeylWord {
        WeylWord(self.0.iter().chain(&o.0).copied().collect())
    }

    pub fn reversed(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    /// The word with the letters at the given positions removed.
    pub fn delete_positions(&self, pos: &BTreeSet<usize>) -> WeylWord {
        WeylWord(self.0.iter().enumerate().filter(|(k, _)| !pos.contains(k)).map(|(_, &i)| i).collect())
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{}", i + 1)).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Parse `s1 s2 s1`, `s1s2s1` or `e`.
pub fn parse_word(rank: usize, s: &str) -> Result<WeylWord> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '.').collect();
    if compact.is_empty() || compact == "e" || compact == "1" {
        return Ok(WeylWord::identity());
    }
    let mut out = Vec::new();
    for part in compact.split('s').skip(1) {
        let i: usize = part.parse().map_err(|_| Error::Parse(format!("bad Weyl word {s:?}")))?;
        if i < 1 || i > rank {
            return Err(Error::Parse(format!("index {i} out of range in {s:?}")));
        }
        out.push(i - 1);
    }
    if !compact.starts_with('s') {
        return Err(Error::Parse(format!("bad Weyl word {s:?}")));
    }
    Ok(WeylWord(out))
}

/// Weyl group element as its integer action matrix on the simple-root
/// basis; column `j` holds `w(alpha_j)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    n: usize,
    m: Vec<i64>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({:?})", self.m)
    }
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        WeylElement { n, m }
    }

    pub fn matrix(&self) -> &[i64] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn apply(&self, r: &Root) -> Root {
        let n = self.n;
        Root((0..n).map(|i| (0..n).map(|j| self.m[i * n + j] * r.0[j]).sum()).collect())
    }

    pub fn mul(&self, o: &WeylElement) -> WeylElement {
        let n = self.n;
        let mut m = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.m[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    m[i * n + j] += a * o.m[k * n + j];
                }
            }
        }
        WeylElement { n, m }
    }
}

impl RootSystem {
    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let n = self.rank();
        let mut e = WeylElement::identity(n);
        for j in 0..n {
            let col = self.reflect(i, &self.simple(j));
            for r in 0..n {
                e.m[r * n + j] = col.0[r];
            }
        }
        e
    }

    pub fn reflection_in(&self, beta: &Root) -> WeylElement {
        let n = self.rank();
        let mut e = WeylElement::identity(n);
        for j in 0..n {
            let col = self.reflect_in(beta, &self.simple(j));
            for r in 0..n {
                e.m[r * n + j] = col.0[r];
            }
        }
        e
    }

    pub fn element(&self, w: &WeylWord) -> WeylElement {
        let mut e = WeylElement::identity(self.rank());
        for &i in &w.0 {
            e = e.mul(&self.simple_reflection(i));
        }
        e
    }

    /// `w(r)` for a word `w = s_{i1} ... s_{ik}`.
    pub fn apply_word(&self, w: &WeylWord, r: &Root) -> Root {
        let mut x = r.clone();
        for &i in w.0.iter().rev() {
            x = self.reflect(i, &x);
        }
        x
    }

    /// Length as the number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots().iter().filter(|b| w.apply(b).is_negative()).count()
    }

    pub fn word_length(&self, w: &WeylWord) -> usize {
        self.length(&self.element(w))
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        self.element(&self.reduced_word_of(w).reversed())
    }

    /// A reduced word for an element, read off by peeling right descents.
    pub fn reduced_word_of(&self, w: &WeylElement) -> WeylWord {
        let mut cur = w.clone();
        let mut rev = Vec::new();
        'outer: loop {
            for i in 0..self.rank() {
                if cur.apply(&self.simple(i)).is_negative() {
                    cur = cur.mul(&self.simple_reflection(i));
                    rev.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        debug_assert!(cur.is_identity());
        rev.reverse();
        WeylWord(rev)
    }

    /// The sequence `beta_k = s_{i1} ... s_{i(k-1)}(alpha_{ik})`.
    pub fn beta_sequence(&self, w: &WeylWord) -> Vec<Root> {
        let mut out = Vec::with_capacity(w.len());
        for k in 0..w.len() {
            let prefix = WeylWord(w.0[..k].to_vec());
            out.push(self.apply_word(&prefix, &self.simple(w.0[k])));
        }
        out
    }

    pub fn is_reduced(&self, w: &WeylWord) -> bool {
        self.beta_sequence(w).iter().all(Root::is_positive)
    }

    /// Ordered inversion set of a reduced word.
    pub fn inversion_set(&self, w: &WeylWord) -> Result<Vec<Root>> {
        let seq = self.beta_sequence(w);
        if seq.iter().any(|b| !b.is_positive()) {
            return Err(Error::Precondition(format!("word {w} is not reduced")));
        }
        Ok(seq)
    }

    /// `Phi^+(w) = { beta > 0 : w^{-1} beta < 0 }` as a set.
    pub fn inversion_set_of(&self, w: &WeylElement) -> BTreeSet<Root> {
        self.positive_roots()
            .iter()
            .filter_map(|g| {
                let x = w.apply(g);
                if x.is_negative() {
                    Some(x.neg())
                } else {
                    None
                }
            })
            .collect()
    }

    /// Reduce a word by the deletion condition: whenever the next letter
    /// would produce a negative root `-beta_j`, delete letter `j` instead.
    pub fn reduce_word(&self, w: &WeylWord) -> WeylWord {
        let mut cur: Vec<usize> = Vec::with_capacity(w.len());
        let mut betas: Vec<Root> = Vec::with_capacity(w.len());
        for &i in &w.0 {
            let b = self.apply_word(&WeylWord(cur.clone()), &self.simple(i));
            if b.is_positive() {
                cur.push(i);
                betas.push(b);
                continue;
            }
            let target = b.neg();
            let j = betas.iter().position(|x| *x == target).expect("deletion condition");
            cur.remove(j);
            betas = self.beta_sequence(&WeylWord(cur.clone()));
        }
        WeylWord(cur)
    }

    /// Weak order test `Phi^+(v) ⊆ Phi^+(w)`.
    pub fn weak_order_leq(&self, v: &WeylWord, w: &WeylWord) -> bool {
        let a = self.inversion_set_of(&self.element(v));
        let b = self.inversion_set_of(&self.element(w));
        a.is_subset(&b)
    }

    /// A reduced word of `w` starting with `s_i`, which exists exactly when
    /// `alpha_i` lies in `Phi^+(w)`.
    pub fn simple_root_prefix(&self, w: &WeylWord, i: usize) -> Result<WeylWord> {
        let e = self.element(w);
        let inv = self.inverse(&e);
        if !inv.apply(&self.simple(i)).is_negative() {
            return Err(Error::NotAnInversion(self.simple(i).to_string()));
        }
        let rest = self.reduce_word(&WeylWord(std::iter::once(i).chain(w.0.iter().copied()).collect()));
        Ok(WeylWord(std::iter::once(i).chain(rest.0).collect()))
    }

    /// Longest element built greedily by right multiplication.
    pub fn longest_element(&self) -> WeylWord {
        let mut word = Vec::new();
        let mut e = WeylElement::identity(self.rank());
        'outer: loop {
            for i in 0..self.rank() {
                if e.apply(&self.simple(i)).is_positive() {
                    e = e.mul(&self.simple_reflection(i));
                    word.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        WeylWord(word)
    }

    /// All subsets of pairwise orthogonal roots in `Phi^+(w)` whose letters
    /// can be deleted from the reduced word leaving a reduced word.
    pub fn t_w_sets(&self, w: &WeylWord) -> Result<Vec<BTreeSet<Root>>> {
        let betas = self.inversion_set(w)?;
        let l = betas.len();
        let mut out = Vec::new();
        let mut stack: Vec<(usize, BTreeSet<usize>)> = vec![(0, BTreeSet::new())];
        while let Some((next, chosen)) = stack.pop() {
            let deleted = w.delete_positions(&chosen);
            let by_deletion = self.is_reduced(&deleted);
            let mut prod = self.element(w);
            for &k in &chosen {
                prod = self.reflection_in(&betas[k]).mul(&prod);
            }
            let by_length = self.length(&prod) == l - chosen.len();
            if by_deletion != by_length {
                return Err(Error::Internal(format!("deletion and length criteria disagree for {w}")));
            }
            if by_deletion {
                out.push(chosen.iter().map(|&k| betas[k].clone()).collect());
            }
            for k in next..l {
                if chosen.iter().all(|&c| self.pairing(&betas[c], &betas[k]) == 0) {
                    let mut c2 = chosen.clone();
                    c2.insert(k);
                    stack.push((k + 1, c2));
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn w(rs: &RootSystem, s: &str) -> WeylWord {
        parse_word(rs.rank(), s).unwrap()
    }

    #[test]
    fn inversion_sets_in_a2() {
        let rs = RootSystem::a(2);
        let a1 = rs.simple(0);
        let a2 = rs.simple(1);
        let a12 = a1.add(&a2);
        assert_eq!(rs.inversion_set(&w(&rs, "s1 s2")).unwrap(), vec![a1.clone(), a12.clone()]);
        assert_eq!(rs.inversion_set(&w(&rs, "s1 s2 s1")).unwrap(), vec![a1, a12, a2]);
        assert!(rs.inversion_set(&WeylWord::identity()).unwrap().is_empty());
    }

    #[test]
    fn word_reduction() {
        let rs = RootSystem::a(2);
        assert!(rs.reduce_word(&w(&rs, "s1 s1")).is_empty());
        assert!(rs.reduce_word(&w(&rs, "s1 s2 s1 s2 s1 s2")).is_empty());
        let x = w(&rs, "s1 s2 s1");
        assert_eq!(rs.reduce_word(&x), x);
        let y = rs.reduce_word(&w(&rs, "s1 s2 s2 s1 s2"));
        assert_eq!(rs.element(&y), rs.simple_reflection(1));
    }

    #[test]
    fn weak_order() {
        let rs = RootSystem::a(2);
        assert!(rs.weak_order_leq(&WeylWord::identity(), &w(&rs, "s2 s1")));
        assert!(!rs.weak_order_leq(&w(&rs, "s1"), &w(&rs, "s2")));
        assert!(rs.weak_order_leq(&w(&rs, "s1"), &w(&rs, "s1 s2")));
    }

    #[test]
    fn prefixes() {
        let rs = RootSystem::a(2);
        assert_eq!(rs.simple_root_prefix(&w(&rs, "s2 s1"), 1).unwrap(), w(&rs, "s2 s1"));
        assert_eq!(rs.simple_root_prefix(&w(&rs, "s1 s2 s1"), 1).unwrap(), w(&rs, "s2 s1 s2"));
        assert!(matches!(rs.simple_root_prefix(&w(&rs, "s1 s2"), 1), Err(Error::NotAnInversion(_))));
    }

    #[test]
    fn t_w_examples() {
        let rs = RootSystem::a(1);
        assert_eq!(rs.t_w_sets(&w(&rs, "s1")).unwrap().len(), 2);
        let rs = RootSystem::a(2);
        let sets = rs.t_w_sets(&w(&rs, "s1 s2")).unwrap();
        assert_eq!(sets.len(), 3);
        assert!(sets.iter().all(|s| s.len() <= 1));
        let sets = rs.t_w_sets(&rs.longest_element()).unwrap();
        // w0 is the reflection in the highest root, so only the simple roots can be deleted
        assert_eq!(sets.len(), 3);
    }

    #[test]
    fn longest_elements() {
        assert_eq!(RootSystem::a(1).longest_element(), WeylWord(vec![0]));
        assert_eq!(RootSystem::a(2).longest_element().len(), 3);
        let rs = RootSystem::a(3);
        let w0 = rs.longest_element();
        assert_eq!(w0.len(), 6);
        let e = rs.element(&w0);
        for i in 0..3 {
            assert_eq!(e.apply(&rs.simple(i)), rs.simple(2 - i).neg());
        }
        for (t, n) in [(CartanType::B, 3), (CartanType::G, 2), (CartanType::D, 4)] {
            let rs = RootSystem::new(t, n).unwrap();
            let w0 = rs.longest_element();
            assert_eq!(w0.len(), rs.num_positive());
            assert_eq!(rs.inversion_set_of(&rs.element(&w0)).len(), rs.num_positive());
        }
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word(3, "s1 s2 s3").unwrap(), WeylWord(vec![0, 1, 2]));
        assert_eq!(parse_word(3, "s1s2").unwrap(), WeylWord(vec![0, 1]));
        assert_eq!(parse_word(3, "e").unwrap(), WeylWord::identity());
        assert!(parse_word(3, "s4").is_err());
        assert_eq!(WeylWord(vec![0, 2]).to_string(), "s1 s3");
    }
}
