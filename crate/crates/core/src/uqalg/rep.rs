//! Tensor powers of the vector representation, used as an independent check
//! on the normal-form multiplication.

use std::collections::BTreeMap;

use crate::coeff::Scalar;
use crate::error::{Error, Result};

use super::{Element, Mono, UqAlgebra};

/// Matrix of an element on `V^{(x) d}`, stored by columns.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrix<C: Scalar> {
    pub dim: usize,
    pub columns: Vec<BTreeMap<usize, C>>,
}

impl<C: Scalar> RepMatrix<C> {
    pub fn entry(&self, row: usize, col: usize) -> C {
        self.columns[col].get(&row).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BTreeMap::is_empty)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let columns = o
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, C> = BTreeMap::new();
                for (k, c) in col {
                    for (r, x) in &self.columns[*k] {
                        let t = x.mul(c);
                        let slot = acc.entry(*r).or_insert_with(C::zero);
                        *slot = slot.add(&t);
                    }
                }
                acc.retain(|_, c| !c.is_zero());
                acc
            })
            .collect();
        RepMatrix { dim: self.dim, columns }
    }
}

struct Tensor<'a> {
    alg: &'a UqAlgebra,
    d: usize,
}

impl Tensor<'_> {
    fn decode(&self, mut idx: usize) -> Vec<usize> {
        let n = self.alg.n();
        let mut v = vec![0; self.d];
        for p in (0..self.d).rev() {
            v[p] = idx % n;
            idx /= n;
        }
        v
    }

    fn encode(&self, v: &[usize]) -> usize {
        v.iter().fold(0, |acc, &i| acc * self.alg.n() + i)
    }

    /// `(mu, wt(v_i))` for the basis vector `v_i` of `V`.
    fn wt_pair(&self, mu: &[i64], i: usize) -> i64 {
        let at = |j: isize| if j < 0 || j as usize >= mu.len() { 0 } else { mu[j as usize] };
        at(i as isize) - at(i as isize - 1)
    }

    fn simple(&self, j: usize) -> Vec<i64> {
        let mut v = vec![0; self.alg.rank()];
        v[j] = 1;
        v
    }

    fn act_k<C: Scalar>(&self, mu: &[i64], v: &BTreeMap<usize, C>) -> BTreeMap<usize, C> {
        v.iter()
            .map(|(&idx, c)| {
                let e: i64 = self.decode(idx).iter().map(|&i| self.wt_pair(mu, i)).sum();
                (idx, c.mul_q_pow(e))
            })
            .collect()
    }

    fn act_ef<C: Scalar>(&self, j: usize, is_e: bool, v: &BTreeMap<usize, C>) -> BTreeMap<usize, C> {
        let aj = self.simple(j);
        let mut out: BTreeMap<usize, C> = BTreeMap::new();
        for (&idx, c) in v {
            let t = self.decode(idx);
            for p in 0..self.d {
                let (from, to) = if is_e { (j + 1, j) } else { (j, j + 1) };
                if t[p] != from {
                    continue;
                }
                let e: i64 = if is_e {
                    t[..p].iter().map(|&i| self.wt_pair(&aj, i)).sum()
                } else {
                    -t[p + 1..].iter().map(|&i| self.wt_pair(&aj, i)).sum::<i64>()
                };
                let mut nt = t.clone();
                nt[p] = to;
                let slot = out.entry(self.encode(&nt)).or_insert_with(C::zero);
                *slot = slot.add(&c.mul_q_pow(e));
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn act_mono<C: Scalar>(&self, m: &Mono, v: &BTreeMap<usize, C>) -> BTreeMap<usize, C> {
        let mut cur = v.clone();
        for &j in m.e.iter().rev() {
            cur = self.act_ef(j as usize, true, &cur);
        }
        if !m.k.is_zero() {
            cur = self.act_k(&m.k.0, &cur);
        }
        for &j in m.f.iter().rev() {
            cur = self.act_ef(j as usize, false, &cur);
        }
        cur
    }
}

/// Matrix of `x` acting on the `d`-th tensor power of the vector
/// representation `V = Q(q)^n`, with `E_i v_{i+1} = v_i`, `F_i v_i = v_{i+1}`
/// and `K_mu v_i = q^{(mu, eps_i)} v_i`.
pub fn rep_eval<C: Scalar>(alg: &UqAlgebra, x: &Element<C>, d: usize) -> Result<RepMatrix<C>> {
    let dim = alg.n().checked_pow(d as u32).filter(|&m| m <= 4096).ok_or_else(|| {
        Error::Guard(format!("representation of dimension {}^{d} is too large", alg.n()))
    })?;
    let t = Tensor { alg, d };
    let columns = (0..dim)
        .map(|col| {
            let basis = BTreeMap::from([(col, C::one())]);
            let mut acc: BTreeMap<usize, C> = BTreeMap::new();
            for (m, c) in x.terms() {
                for (r, y) in t.act_mono(m, &basis) {
                    let slot = acc.entry(r).or_insert_with(C::zero);
                    *slot = slot.add(&y.mul(c));
                }
            }
            acc.retain(|_, c| !c.is_zero());
            acc
        })
        .collect();
    Ok(RepMatrix { dim, columns })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RationalFunction;
    use crate::uqalg::Elem;

    #[test]
    fn relations_hold_in_tensor_square() {
        let a = UqAlgebra::sl(3).unwrap();
        let e: Elem = a.e(0);
        let f: Elem = a.f(0);
        let lhs = rep_eval(&a, &a.q_commutator(&e, &f, &RationalFunction::one()), 2).unwrap();
        let re = rep_eval(&a, &e, 2).unwrap();
        let rf_ = rep_eval(&a, &f, 2).unwrap();
        let comm = {
            let ef = re.mul(&rf_);
            let fe = rf_.mul(&re);
            let columns = ef
                .columns
                .iter()
                .zip(&fe.columns)
                .map(|(x, y)| {
                    let mut c = x.clone();
                    for (k, v) in y {
                        let s = c.entry(*k).or_insert_with(RationalFunction::zero);
                        *s = &*s - v;
                    }
                    c.retain(|_, v| !v.is_zero());
                    c
                })
                .collect();
            RepMatrix { dim: ef.dim, columns }
        };
        assert_eq!(lhs, comm);
    }

    #[test]
    fn products_are_homomorphic() {
        let a = UqAlgebra::sl(3).unwrap();
        let x = a.parse("E1 E2 + F2 K[a1] + (q) F1").unwrap();
        let y = a.parse("F1 F2 - E2 + K[-a2]").unwrap();
        let lhs = rep_eval(&a, &a.mul(&x, &y), 2).unwrap();
        let rhs = rep_eval(&a, &x, 2).unwrap().mul(&rep_eval(&a, &y, 2).unwrap());
        assert_eq!(lhs, rhs);
    }
}
