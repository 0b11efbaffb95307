//! Quantum shuffle embedding of `U^+` and the per-degree word basis.
//!
//! A word `a1 ... ak` stands for the product `E_{a1} ... E_{ak}`. Its image
//! in the shuffle algebra has, as coefficient of the word `v`, the value
//! `r_{v1}( ... r_{vk}(x))`, so `r_i` is last-letter removal and `r'_i` is
//! first-letter removal.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_traits::One;

use crate::coeff::{LaurentPoly, RationalFunction};
use crate::error::{Error, Result};

pub type Word = Vec<u8>;
pub type ShuffleVec = BTreeMap<Word, LaurentPoly>;

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, PRIME - 2)
}

fn eval_mod(p: &LaurentPoly, q0: u64) -> u64 {
    let qi = invmod(q0);
    let mut acc = 0u64;
    for (e, c) in p.terms() {
        assert!(c.denom().is_one(), "shuffle coefficients are integral");
        let m = (c.numer() % num_bigint::BigInt::from(PRIME)).to_string().parse::<i128>().unwrap();
        let m = m.rem_euclid(PRIME as i128) as u64;
        let qp = if e >= 0 { powmod(q0, e as u64) } else { powmod(qi, (-e) as u64) };
        acc = (acc + mulmod(m, qp)) % PRIME;
    }
    acc
}

/// Basis data for one degree of `U^+`.
#[derive(Debug)]
pub struct DegreeData {
    pub basis: Vec<Word>,
    index: HashMap<Word, usize>,
    pivots: Vec<Word>,
    ainv: Vec<Vec<RationalFunction>>,
}

impl DegreeData {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }
}

pub struct ShuffleEngine {
    form: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    psi_cache: RwLock<HashMap<Word, Arc<ShuffleVec>>>,
    degree_cache: RwLock<HashMap<Vec<i64>, Arc<DegreeData>>>,
    reduce_cache: RwLock<HashMap<Word, Arc<Vec<(Word, RationalFunction)>>>>,
}

pub fn content(w: &[u8], rank: usize) -> Vec<i64> {
    let mut c = vec![0i64; rank];
    for &a in w {
        c[a as usize] += 1;
    }
    c
}

impl ShuffleEngine {
    pub fn new(form: Vec<Vec<i64>>, positive_roots: Vec<Vec<i64>>) -> Self {
        ShuffleEngine {
            form,
            roots: positive_roots,
            psi_cache: RwLock::new(HashMap::new()),
            degree_cache: RwLock::new(HashMap::new()),
            reduce_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.form.len()
    }

    /// `(alpha_i, |w|)`.
    fn pair_letter(&self, i: u8, w: &[u8]) -> i64 {
        w.iter().map(|&a| self.form[i as usize][a as usize]).sum()
    }

    /// Shuffle image of the product `E_{w1} ... E_{wk}`.
    pub fn psi(&self, w: &[u8]) -> Arc<ShuffleVec> {
        if let Some(v) = self.psi_cache.read().unwrap().get(w) {
            return v.clone();
        }
        let v = if w.len() <= 1 {
            BTreeMap::from([(w.to_vec(), LaurentPoly::one())])
        } else {
            let head = self.psi(&w[..w.len() - 1]);
            let i = w[w.len() - 1];
            let mut out: ShuffleVec = BTreeMap::new();
            for (u, c) in head.iter() {
                for p in 0..=u.len() {
                    let e = self.pair_letter(i, &u[p..]);
                    let mut nw = Vec::with_capacity(u.len() + 1);
                    nw.extend_from_slice(&u[..p]);
                    nw.push(i);
                    nw.extend_from_slice(&u[p..]);
                    let t = c.shift(e);
                    let slot = out.entry(nw).or_default();
                    *slot = &*slot + &t;
                }
            }
            out.retain(|_, c| !c.is_zero());
            out
        };
        let v = Arc::new(v);
        self.psi_cache.write().unwrap().insert(w.to_vec(), v.clone());
        v
    }

    /// Shuffle product of two shuffle vectors.
    pub fn shuffle(&self, a: &ShuffleVec, b: &ShuffleVec) -> ShuffleVec {
        let mut memo = HashMap::new();
        let mut out: ShuffleVec = BTreeMap::new();
        for (u, cu) in a {
            for (v, cv) in b {
                let c = cu * cv;
                for (w, x) in self.shuffle_words(u, v, &mut memo).iter() {
                    let slot = out.entry(w.clone()).or_default();
                    *slot = &*slot + &(&c * x);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn shuffle_words(
        &self,
        u: &[u8],
        v: &[u8],
        memo: &mut HashMap<(Word, Word), Arc<ShuffleVec>>,
    ) -> Arc<ShuffleVec> {
        let key = (u.to_vec(), v.to_vec());
        if let Some(r) = memo.get(&key) {
            return r.clone();
        }
        let mut out: ShuffleVec = BTreeMap::new();
        if u.is_empty() || v.is_empty() {
            let w: Word = u.iter().chain(v).copied().collect();
            out.insert(w, LaurentPoly::one());
        } else {
            // (u'a) * (v'b) = ((u'a) * v') b + q^{(a, |v'b|)} (u' * (v'b)) a
            let b = v[v.len() - 1];
            for (w, c) in self.shuffle_words(u, &v[..v.len() - 1], memo).iter() {
                let mut nw = w.clone();
                nw.push(b);
                let slot = out.entry(nw).or_default();
                *slot = &*slot + c;
            }
            let a = u[u.len() - 1];
            let e = self.pair_letter(a, v);
            for (w, c) in self.shuffle_words(&u[..u.len() - 1], v, memo).iter() {
                let mut nw = w.clone();
                nw.push(a);
                let slot = out.entry(nw).or_default();
                *slot = &*slot + &c.shift(e);
            }
            out.retain(|_, c| !c.is_zero());
        }
        let r = Arc::new(out);
        memo.insert(key, r.clone());
        r
    }

    /// Dimension of `U^+` in the given degree: number of ways to write the
    /// degree as a sum of positive roots.
    pub fn kostant(&self, deg: &[i64]) -> usize {
        fn go(roots: &[Vec<i64>], k: usize, rest: &mut Vec<i64>, memo: &mut HashMap<(usize, Vec<i64>), usize>) -> usize {
            if rest.iter().all(|&c| c == 0) {
                return 1;
            }
            if k == roots.len() {
                return 0;
            }
            if let Some(&v) = memo.get(&(k, rest.clone())) {
                return v;
            }
            let mut total = go(roots, k + 1, rest, memo);
            let r = &roots[k];
            let mut used = 0;
            while rest.iter().zip(r).all(|(a, b)| a >= b) {
                for (a, b) in rest.iter_mut().zip(r) {
                    *a -= b;
                }
                used += 1;
                total += go(roots, k + 1, rest, memo);
            }
            for (a, b) in rest.iter_mut().zip(r) {
                *a += b * used;
            }
            memo.insert((k, rest.clone()), total);
            total
        }
        go(&self.roots, 0, &mut deg.to_vec(), &mut HashMap::new())
    }

    fn words_of_content(deg: &[i64]) -> Vec<Word> {
        fn rec(rest: &mut Vec<i64>, cur: &mut Word, out: &mut Vec<Word>) {
            if rest.iter().all(|&c| c == 0) {
                out.push(cur.clone());
                return;
            }
            for i in 0..rest.len() {
                if rest[i] > 0 {
                    rest[i] -= 1;
                    cur.push(i as u8);
                    rec(rest, cur, out);
                    cur.pop();
                    rest[i] += 1;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut deg.to_vec(), &mut Vec::new(), &mut out);
        out
    }

    /// Basis of `U^+` in degree `deg`: the lexicographically first words whose
    /// products are linearly independent.
    pub fn degree_data(&self, deg: &[i64]) -> Result<Arc<DegreeData>> {
        if let Some(d) = self.degree_cache.read().unwrap().get(deg) {
            return Ok(d.clone());
        }
        let d = Arc::new(self.build_degree(deg)?);
        self.degree_cache.write().unwrap().insert(deg.to_vec(), d.clone());
        Ok(d)
    }

    fn build_degree(&self, deg: &[i64]) -> Result<DegreeData> {
        let expected = self.kostant(deg);
        let words = Self::words_of_content(deg);
        for q0 in [1_234_567u64, 7_654_321, 99_991, 31_337] {
            let mut rows: Vec<(Word, HashMap<Word, u64>)> = Vec::new();
            let mut basis = Vec::new();
            let mut pivots = Vec::new();
            for w in &words {
                let img = self.psi(w);
                let mut v: HashMap<Word, u64> =
                    img.iter().map(|(k, c)| (k.clone(), eval_mod(c, q0))).filter(|(_, c)| *c != 0).collect();
                for (pw, row) in &rows {
                    let Some(&f) = v.get(pw) else { continue };
                    for (k, c) in row {
                        let e = v.entry(k.clone()).or_insert(0);
                        *e = (*e + PRIME - mulmod(f, *c)) % PRIME;
                    }
                    v.retain(|_, c| *c != 0);
                }
                if v.is_empty() {
                    continue;
                }
                let pw = v.keys().min().unwrap().clone();
                let inv = invmod(v[&pw]);
                for c in v.values_mut() {
                    *c = mulmod(*c, inv);
                }
                rows.push((pw.clone(), v));
                basis.push(w.clone());
                pivots.push(pw);
                if basis.len() == expected {
                    break;
                }
            }
            if basis.len() != expected {
                continue;
            }
            let a: Vec<Vec<RationalFunction>> = basis
                .iter()
                .map(|b| {
                    let img = self.psi(b);
                    pivots
                        .iter()
                        .map(|p| img.get(p).map(|c| RationalFunction::from_poly(c.clone())).unwrap_or_default())
                        .collect()
                })
                .collect();
            let ainv = invert(a).ok_or_else(|| Error::Internal(format!("singular basis matrix in degree {deg:?}")))?;
            let index = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
            return Ok(DegreeData { basis, index, pivots, ainv });
        }
        Err(Error::Internal(format!("could not find a basis in degree {deg:?}")))
    }

    /// Coordinates of the word product `E_w` in the basis of its degree.
    pub fn reduce(&self, w: &[u8]) -> Result<Arc<Vec<(Word, RationalFunction)>>> {
        if let Some(r) = self.reduce_cache.read().unwrap().get(w) {
            return Ok(r.clone());
        }
        let deg = content(w, self.rank());
        let dd = self.degree_data(&deg)?;
        let r = if dd.index_of(&w.to_vec()).is_some() {
            vec![(w.to_vec(), RationalFunction::one())]
        } else {
            self.coords(&dd, &self.psi(w))
        };
        let r = Arc::new(r);
        self.reduce_cache.write().unwrap().insert(w.to_vec(), r.clone());
        Ok(r)
    }

    /// Coordinates of a shuffle vector lying in the image of one degree.
    pub fn coords(&self, dd: &DegreeData, v: &ShuffleVec) -> Vec<(Word, RationalFunction)> {
        let vp: Vec<RationalFunction> =
            dd.pivots.iter().map(|p| v.get(p).map(|c| RationalFunction::from_poly(c.clone())).unwrap_or_default()).collect();
        let mut out = Vec::new();
        for (k, b) in dd.basis.iter().enumerate() {
            let mut acc = RationalFunction::zero();
            for (m, x) in vp.iter().enumerate() {
                if !x.is_zero() && !dd.ainv[m][k].is_zero() {
                    acc = &acc + &(x * &dd.ainv[m][k]);
                }
            }
            if !acc.is_zero() {
                out.push((b.clone(), acc));
            }
        }
        out
    }

    /// Expresses a shuffle vector (homogeneous of degree `deg`) in the word
    /// basis, checking that it really lies in the image.
    pub fn express(&self, deg: &[i64], v: &ShuffleVec) -> Result<Vec<(Word, RationalFunction)>> {
        let dd = self.degree_data(deg)?;
        let c = self.coords(&dd, v);
        let mut back: BTreeMap<Word, RationalFunction> = BTreeMap::new();
        for (b, x) in &c {
            for (w, y) in self.psi(b).iter() {
                let slot = back.entry(w.clone()).or_default();
                *slot = &*slot + &(x * &RationalFunction::from_poly(y.clone()));
            }
        }
        back.retain(|_, c| !c.is_zero());
        let orig: BTreeMap<Word, RationalFunction> =
            v.iter().map(|(k, c)| (k.clone(), RationalFunction::from_poly(c.clone()))).collect();
        if back != orig {
            return Err(Error::NotInSpan("shuffle vector outside the image of U+".into()));
        }
        Ok(c)
    }
}

/// Gauss-Jordan inverse over Q(q).
pub fn invert(mut a: Vec<Vec<RationalFunction>>) -> Option<Vec<Vec<RationalFunction>>> {
    let n = a.len();
    let mut inv: Vec<Vec<RationalFunction>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { RationalFunction::one() } else { RationalFunction::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].numerator().num_terms() + a[r][col].denominator().num_terms())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].inv().ok()?;
        for j in 0..n {
            if !a[col][j].is_zero() {
                a[col][j] = &a[col][j] * &p;
            }
            if !inv[col][j].is_zero() {
                inv[col][j] = &inv[col][j] * &p;
            }
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                if !a[col][j].is_zero() {
                    a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                }
                if !inv[col][j].is_zero() {
                    inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn engine(n: usize) -> ShuffleEngine {
        let rs = RootSystem::a(n);
        ShuffleEngine::new(rs.form_matrix().to_vec(), rs.positive_roots().iter().map(|r| r.0.clone()).collect())
    }

    #[test]
    fn serre_relation_vanishes() {
        let e = engine(2);
        // E1^2 E2 - (q + q^-1) E1 E2 E1 + E2 E1^2
        let mut acc: ShuffleVec = BTreeMap::new();
        let qq = &LaurentPoly::q_pow(1) + &LaurentPoly::q_pow(-1);
        for (w, c) in [(vec![0, 0, 1], LaurentPoly::one()), (vec![0, 1, 0], -&qq), (vec![1, 0, 0], LaurentPoly::one())] {
            for (k, x) in e.psi(&w).iter() {
                let slot = acc.entry(k.clone()).or_default();
                *slot = &*slot + &(&c * x);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        assert!(acc.is_empty());
    }

    #[test]
    fn commuting_letters() {
        let e = engine(3);
        assert_eq!(e.psi(&[0, 2]), e.psi(&[2, 0]));
    }

    #[test]
    fn shuffle_product_matches_concatenation() {
        let e = engine(3);
        let a = e.psi(&[0, 1]);
        let b = e.psi(&[2, 1]);
        assert_eq!(e.shuffle(&a, &b), *e.psi(&[0, 1, 2, 1]));
    }

    #[test]
    fn dimensions_match_partition_counts() {
        let e = engine(2);
        assert_eq!(e.kostant(&[1, 1]), 2);
        assert_eq!(e.kostant(&[2, 1]), 2);
        assert_eq!(e.kostant(&[2, 2]), 3);
        for deg in [[1, 1], [2, 1], [2, 2]] {
            assert_eq!(e.degree_data(&deg).unwrap().dim(), e.kostant(&deg));
        }
        let e3 = engine(3);
        assert_eq!(e3.kostant(&[1, 1, 1]), 4);
        assert_eq!(e3.degree_data(&[1, 2, 1]).unwrap().dim(), e3.kostant(&[1, 2, 1]));
    }

    #[test]
    fn reduction_of_serre_word() {
        let e = engine(2);
        // E2 E1 E1 = (q + q^-1) E1 E2 E1 - E1 E1 E2
        let r = e.reduce(&[1, 0, 0]).unwrap();
        let m: BTreeMap<_, _> = r.iter().cloned().collect();
        assert_eq!(m.len(), 2);
        assert_eq!(m[&vec![0, 1, 0]], crate::coeff::q_number(2, 1));
        assert_eq!(m[&vec![0, 0, 1]], RationalFunction::from_int(-1));
    }
}
