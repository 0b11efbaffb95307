//! The quantized enveloping algebra `U_q(sl_n)` with exact normal forms.
//!
//! Elements are combinations of monomials `F_a K_mu E_b`, where `a` and `b`
//! run over a fixed word basis of each degree of `U^-` and `U^+` (see
//! [`shuffle`]). Conventions:
//!
//! * `K_mu E_j K_mu^{-1} = q^{(mu, alpha_j)} E_j`,
//!   `K_mu F_j K_mu^{-1} = q^{-(mu, alpha_j)} F_j`;
//! * `E_i F_j - F_j E_i = delta_ij (K_i - K_i^{-1}) / (q - q^{-1})`;
//! * `Delta(E) = E (x) 1 + K (x) E`, `Delta(F) = F (x) K^{-1} + 1 (x) F`.

mod element;
pub mod linalg;
mod lusztig;
mod parse;
mod rep;
pub mod shuffle;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

pub use element::{Elem, Element, Mono, SymElem};
pub use linalg::SpanSolver;
pub use rep::{rep_eval, RepMatrix};

use crate::coeff::{RationalFunction, Scalar};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Root, RootSystem};
use shuffle::{content, ShuffleEngine, Word};

type StraightTerm = (Word, Root, Word, RationalFunction);

/// Algebra context: root data plus the normal-form caches.
pub struct UqAlgebra {
    n: usize,
    rs: RootSystem,
    shuffle: ShuffleEngine,
    straight: RwLock<HashMap<(Word, Word), Arc<Vec<StraightTerm>>>>,
}

impl std::fmt::Debug for UqAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "U_q(sl_{})", self.n)
    }
}

impl UqAlgebra {
    /// `U_q(sl_n)` for `2 <= n <= 6`.
    pub fn sl(n: usize) -> Result<Self> {
        if !(2..=6).contains(&n) {
            return Err(Error::InvalidArgument(format!("sl_{n} is outside the supported range 2..=6")));
        }
        let rs = RootSystem::new(CartanType::A, n - 1)?;
        let shuffle = ShuffleEngine::new(
            rs.form_matrix().to_vec(),
            rs.positive_roots().iter().map(|r| r.0.clone()).collect(),
        );
        Ok(UqAlgebra { n, rs, shuffle, straight: RwLock::new(HashMap::new()) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn shuffle_engine(&self) -> &ShuffleEngine {
        &self.shuffle
    }

    pub(crate) fn word_degree(&self, w: &[u8]) -> Root {
        Root(content(w, self.rank()))
    }

    pub fn one<C: Scalar>(&self) -> Element<C> {
        Element::from_mono(Mono::one(self.rank()), C::one())
    }

    pub fn scalar<C: Scalar>(&self, c: C) -> Element<C> {
        Element::from_mono(Mono::one(self.rank()), c)
    }

    /// `E_i` (0-based index).
    pub fn e<C: Scalar>(&self, i: usize) -> Element<C> {
        assert!(i < self.rank());
        Element::from_mono(Mono { f: vec![], k: self.rs.zero_root(), e: vec![i as u8] }, C::one())
    }

    pub fn f<C: Scalar>(&self, i: usize) -> Element<C> {
        assert!(i < self.rank());
        Element::from_mono(Mono { f: vec![i as u8], k: self.rs.zero_root(), e: vec![] }, C::one())
    }

    pub fn k<C: Scalar>(&self, mu: &Root) -> Element<C> {
        assert_eq!(mu.rank(), self.rank());
        Element::from_mono(Mono { f: vec![], k: mu.clone(), e: vec![] }, C::one())
    }

    /// `K_i^{exp}`.
    pub fn k_simple<C: Scalar>(&self, i: usize, exp: i64) -> Element<C> {
        self.k(&self.rs.simple(i).scale(exp))
    }

    /// Product of a word of generators `E_{w1} ... E_{wk}`.
    pub fn e_word<C: Scalar>(&self, w: &[u8]) -> Element<C> {
        let mut out = Element::zero();
        for (b, c) in self.shuffle.reduce(w).expect("word basis").iter() {
            out.add_term(Mono { f: vec![], k: self.rs.zero_root(), e: b.clone() }, C::from_rf(c.clone()));
        }
        out
    }

    pub fn f_word<C: Scalar>(&self, w: &[u8]) -> Element<C> {
        let mut out = Element::zero();
        for (b, c) in self.shuffle.reduce(w).expect("word basis").iter() {
            out.add_term(Mono { f: b.clone(), k: self.rs.zero_root(), e: vec![] }, C::from_rf(c.clone()));
        }
        out
    }

    /// Normal form of `E_b F_c` for raw words.
    fn straighten(&self, b: &[u8], c: &[u8]) -> Arc<Vec<StraightTerm>> {
        let key = (b.to_vec(), c.to_vec());
        if let Some(r) = self.straight.read().unwrap().get(&key) {
            return r.clone();
        }
        let zero = self.rs.zero_root();
        let mut acc: BTreeMap<(Word, Root, Word), RationalFunction> = BTreeMap::new();
        let push = |acc: &mut BTreeMap<(Word, Root, Word), RationalFunction>, f: Word, k: Root, e: Word, x: RationalFunction| {
            let slot = acc.entry((f, k, e)).or_default();
            *slot = &*slot + &x;
        };
        if b.is_empty() || c.is_empty() {
            push(&mut acc, c.to_vec(), zero, b.to_vec(), RationalFunction::one());
        } else {
            let j = b[b.len() - 1];
            let head = &b[..b.len() - 1];
            // E_j F_c = F_c E_j + sum_p (q^{-(a_j, rho_p)} F_{c\p} K_j - q^{(a_j, rho_p)} F_{c\p} K_j^{-1}) / (q - q^{-1})
            for (x, lam, y, s) in self.straighten(head, c).iter() {
                let mut ny = y.clone();
                ny.push(j);
                push(&mut acc, x.clone(), lam.clone(), ny, s.clone());
            }
            let qd = crate::coeff::q_diff(1).inv().unwrap();
            let aj = self.rs.simple(j as usize);
            for p in 0..c.len() {
                if c[p] != j {
                    continue;
                }
                let rho = self.word_degree(&c[p + 1..]);
                let e = self.rs.pairing(&aj, &rho);
                let mut rest = c[..p].to_vec();
                rest.extend_from_slice(&c[p + 1..]);
                for (sign, nu, qe) in [(1i64, aj.clone(), -e), (-1, aj.neg(), e)] {
                    let coef = qd.mul_q_pow(qe).scale(&crate::coeff::rational(sign, 1));
                    for (x, lam, y, s) in self.straighten(head, &rest).iter() {
                        // E_y K_nu = q^{-(nu, |y|)} K_nu E_y
                        let shift = -self.rs.pairing(&nu, &self.word_degree(y));
                        push(&mut acc, x.clone(), lam.add(&nu), y.clone(), (s * &coef).mul_q_pow(shift));
                    }
                }
            }
        }
        let r: Vec<StraightTerm> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((f, k, e), c)| (f, k, e, c)).collect();
        let r = Arc::new(r);
        self.straight.write().unwrap().insert(key, r.clone());
        r
    }

    /// Product of two basis monomials.
    pub fn mul_mono(&self, m1: &Mono, m2: &Mono) -> Vec<(Mono, RationalFunction)> {
        let mut acc: BTreeMap<Mono, RationalFunction> = BTreeMap::new();
        for (x, lam, y, s) in self.straighten(&m1.e, &m2.f).iter() {
            let shift = -self.rs.pairing(&m1.k, &self.word_degree(x)) - self.rs.pairing(&m2.k, &self.word_degree(y));
            let coef = s.mul_q_pow(shift);
            let mut fw = m1.f.clone();
            fw.extend_from_slice(x);
            let mut ew = y.clone();
            ew.extend_from_slice(&m2.e);
            let k = m1.k.add(lam).add(&m2.k);
            let fr = self.shuffle.reduce(&fw).expect("word basis");
            let er = self.shuffle.reduce(&ew).expect("word basis");
            for (fb, a) in fr.iter() {
                let ca = &coef * a;
                for (eb, b) in er.iter() {
                    let slot = acc.entry(Mono { f: fb.clone(), k: k.clone(), e: eb.clone() }).or_default();
                    *slot = &*slot + &(&ca * b);
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn mul<C: Scalar>(&self, x: &Element<C>, y: &Element<C>) -> Element<C> {
        let mut acc: BTreeMap<Mono, C> = BTreeMap::new();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                let c = c1.mul(c2);
                for (m, s) in self.mul_mono(m1, m2) {
                    let t = c.scale(&s);
                    match acc.get_mut(&m) {
                        Some(slot) => *slot = slot.add(&t),
                        None => {
                            acc.insert(m, t);
                        }
                    }
                }
            }
        }
        Element::from_map(acc)
    }

    pub fn product<C: Scalar>(&self, xs: &[&Element<C>]) -> Element<C> {
        let mut out = self.one();
        for x in xs {
            out = self.mul(&out, x);
        }
        out
    }

    pub fn pow<C: Scalar>(&self, x: &Element<C>, n: u32) -> Element<C> {
        let mut out = self.one();
        for _ in 0..n {
            out = self.mul(&out, x);
        }
        out
    }

    /// `[x, y]_c = x y - c y x`.
    pub fn q_commutator<C: Scalar>(&self, x: &Element<C>, y: &Element<C>, c: &C) -> Element<C> {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        xy.sub(&yx.scale_by(c))
    }

    /// Applies the algebra (anti-)homomorphism determined by generator images.
    pub fn map_generators<C: Scalar>(
        &self,
        x: &Element<C>,
        img_e: &dyn Fn(usize) -> Element<C>,
        img_f: &dyn Fn(usize) -> Element<C>,
        img_k: &dyn Fn(&Root) -> Element<C>,
        anti: bool,
    ) -> Element<C> {
        let es: Vec<Element<C>> = (0..self.rank()).map(img_e).collect();
        let fs: Vec<Element<C>> = (0..self.rank()).map(img_f).collect();
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            let mut factors: Vec<Element<C>> = Vec::new();
            factors.extend(m.f.iter().map(|&a| fs[a as usize].clone()));
            if !m.k.is_zero() {
                factors.push(img_k(&m.k));
            }
            factors.extend(m.e.iter().map(|&a| es[a as usize].clone()));
            if anti {
                factors.reverse();
            }
            let mut p = self.scalar(c.clone());
            for f in &factors {
                p = self.mul(&p, f);
            }
            out = out.add(&p);
        }
        out
    }

    /// The automorphism `omega`: `E_i <-> F_i`, `K_mu -> K_{-mu}`.
    pub fn omega<C: Scalar>(&self, x: &Element<C>) -> Element<C> {
        self.map_generators(x, &|i| self.f(i), &|i| self.e(i), &|mu| self.k(&mu.neg()), false)
    }

    /// Cartan involution exchanging `E_i` and `F_i` and inverting `K`; this
    /// is [`UqAlgebra::omega`].
    pub fn cartan_involution<C: Scalar>(&self, x: &Element<C>) -> Element<C> {
        self.omega(x)
    }

    /// The anti-automorphism `tau`: `E_i -> E_i`, `F_i -> F_i`, `K_mu -> K_{-mu}`.
    pub fn tau<C: Scalar>(&self, x: &Element<C>) -> Element<C> {
        self.map_generators(x, &|i| self.e(i), &|i| self.f(i), &|mu| self.k(&mu.neg()), true)
    }

    /// The anti-automorphism `sigma = omega tau`: `E_i <-> F_i`, `K_mu` fixed.
    pub fn sigma<C: Scalar>(&self, x: &Element<C>) -> Element<C> {
        self.map_generators(x, &|i| self.f(i), &|i| self.e(i), &|mu| self.k(mu), true)
    }

    /// Checks that an element lies in `U^+` (no `F` and no `K` parts).
    pub fn is_in_u_plus<C: Scalar>(&self, x: &Element<C>) -> bool {
        x.terms().all(|(m, _)| m.f.is_empty() && m.k.is_zero())
    }

    pub fn is_in_u_minus<C: Scalar>(&self, x: &Element<C>) -> bool {
        x.terms().all(|(m, _)| m.e.is_empty() && m.k.is_zero())
    }

    /// Weight of a homogeneous element, `None` if it is not homogeneous.
    pub fn weight<C: Scalar>(&self, x: &Element<C>) -> Option<Root> {
        let mut w = None;
        for (m, _) in x.terms() {
            let d = self.word_degree(&m.e).sub(&self.word_degree(&m.f));
            match &w {
                None => w = Some(d),
                Some(v) if *v == d => {}
                _ => return None,
            }
        }
        w
    }

    pub fn format<C: Scalar>(&self, x: &Element<C>) -> String {
        x.to_string()
    }

    pub fn parse_sym(&self, s: &str) -> Result<SymElem> {
        parse::parse_element(self, s)
    }

    pub fn parse(&self, s: &str) -> Result<Elem> {
        let x = parse::parse_element(self, s)?;
        x.to_rf().ok_or_else(|| Error::Parse(format!("{s:?} contains character symbols")))
    }

    /// Lusztig's automorphism `T_i`.
    pub fn lusztig_t<C: Scalar>(&self, i: usize, x: &Element<C>) -> Element<C> {
        lusztig::apply_t(self, i, x, false)
    }

    pub fn lusztig_t_inv<C: Scalar>(&self, i: usize, x: &Element<C>) -> Element<C> {
        lusztig::apply_t(self, i, x, true)
    }

    /// Root vectors `E_{beta_k} = T_{i1} ... T_{i(k-1)}(E_{ik})` of a reduced word.
    pub fn root_vectors_e(&self, word: &[usize]) -> Result<Vec<(Root, Elem)>> {
        lusztig::root_vectors(self, word, false)
    }

    /// Root vectors `F_{beta_k} = T_{i1}^{-1} ... T_{i(k-1)}^{-1}(F_{ik})`.
    pub fn root_vectors_f(&self, word: &[usize]) -> Result<Vec<(Root, Elem)>> {
        lusztig::root_vectors(self, word, true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::q_number;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn ef_commutator() {
        let a = UqAlgebra::sl(3).unwrap();
        let e: Elem = a.e(0);
        let f: Elem = a.f(0);
        let c = a.q_commutator(&e, &f, &RationalFunction::one());
        let expected = a.k_simple::<RationalFunction>(0, 1).sub(&a.k_simple(0, -1)).scale_by(&crate::coeff::q_diff(1).inv().unwrap());
        assert_eq!(c, expected);
        assert!(a.q_commutator(&a.e::<RationalFunction>(0), &a.f(1), &RationalFunction::one()).is_zero());
    }

    #[test]
    fn k_commutation() {
        let a = UqAlgebra::sl(3).unwrap();
        let k: Elem = a.k_simple(0, 1);
        let e: Elem = a.e(1);
        let lhs = a.mul(&k, &e);
        let rhs = a.mul(&e, &k).scale_by(&RationalFunction::q_pow(-1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn serre_relations() {
        for n in 3..=4 {
            let a = UqAlgebra::sl(n).unwrap();
            for i in 0..a.rank() {
                for j in 0..a.rank() {
                    let aij = a.rs.cartan_matrix()[i][j];
                    let (ei, ej, fi, fj): (Elem, Elem, Elem, Elem) = (a.e(i), a.e(j), a.f(i), a.f(j));
                    if i == j {
                        continue;
                    }
                    if aij == 0 {
                        assert!(a.q_commutator(&ei, &ej, &RationalFunction::one()).is_zero());
                        assert!(a.q_commutator(&fi, &fj, &RationalFunction::one()).is_zero());
                    } else {
                        let s = a.product(&[&ei, &ei, &ej]).sub(&a.product(&[&ei, &ej, &ei]).scale_by(&q_number(2, 1))).add(&a.product(&[&ej, &ei, &ei]));
                        assert!(s.is_zero());
                        let s = a.product(&[&fi, &fi, &fj]).sub(&a.product(&[&fi, &fj, &fi]).scale_by(&q_number(2, 1))).add(&a.product(&[&fj, &fi, &fi]));
                        assert!(s.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_small() {
        let a = UqAlgebra::sl(3).unwrap();
        let x = a.parse("E1 E2 + q*F1").unwrap();
        let y = a.parse("F2 F1 - K1").unwrap();
        let z = a.parse("E2 + F1 E1").unwrap();
        assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
    }

    #[test]
    fn involutions() {
        let a = UqAlgebra::sl(3).unwrap();
        let x = a.parse("E1 E2 F1 + (q^2)*K[a1-a2] E2 + F2").unwrap();
        assert_eq!(a.omega(&a.omega(&x)), x);
        assert_eq!(a.tau(&a.tau(&x)), x);
        assert_eq!(a.sigma(&a.sigma(&x)), x);
        assert_eq!(a.cartan_involution(&a.e::<RationalFunction>(0)), a.f(0));
        let e12 = a.parse("E1 E2").unwrap();
        assert_eq!(a.tau(&e12), a.parse("E2 E1").unwrap());
        let _ = rf("q");
    }
}
