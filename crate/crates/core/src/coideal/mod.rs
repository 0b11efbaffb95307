//! Coproducts on normal forms, the skew derivations `r_alpha`, `r'_alpha`
//! and their powers, and character shifts of right coideal subalgebras.

mod character;

use std::collections::BTreeMap;
use std::fmt;

pub use character::{
    character_shift, character_shift_closed, parse_character, psi, BarElement, Character, PbwAlgebra, Side,
};

use crate::coeff::{q_number, RationalFunction, Scalar};
use crate::error::{Error, Result};
use crate::rootsys::Root;
use crate::uqalg::shuffle::{ShuffleVec, Word};
use crate::uqalg::{Elem, Element, Mono, UqAlgebra};

/// Element of `U (x) U` with both legs in normal form.
#[derive(Clone, PartialEq, Default)]
pub struct TensorElement<C: Scalar> {
    terms: BTreeMap<(Mono, Mono), C>,
}

impl<C: Scalar> TensorElement<C> {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, l: Mono, r: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        let key = (l, r);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot = slot.add(&c);
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Mono, Mono), &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &o.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    /// Groups the tensor by its right leg: `sum_r L_r (x) r`.
    pub fn by_right_leg(&self) -> BTreeMap<Mono, Element<C>> {
        let mut out: BTreeMap<Mono, Element<C>> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            out.entry(r.clone()).or_insert_with(Element::zero).add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn by_left_leg(&self) -> BTreeMap<Mono, Element<C>> {
        let mut out: BTreeMap<Mono, Element<C>> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            out.entry(l.clone()).or_insert_with(Element::zero).add_term(r.clone(), c.clone());
        }
        out
    }
}

impl<C: Scalar> fmt::Display for TensorElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((l, r), c)| format!("({c}) {l} (x) {r}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Scalar> fmt::Debug for TensorElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn subset_split(w: &[u8], mask: u32) -> (Word, Word) {
    let mut out = Vec::new();
    let mut inn = Vec::new();
    for (p, &a) in w.iter().enumerate() {
        if mask >> p & 1 == 1 {
            inn.push(a);
        } else {
            out.push(a);
        }
    }
    (out, inn)
}

fn coproduct_mono(alg: &UqAlgebra, m: &Mono) -> Vec<(Mono, Mono, RationalFunction)> {
    let rs = alg.root_system();
    let form = rs.form_matrix();
    let se = alg.shuffle_engine();
    let pair = |a: u8, b: u8| form[a as usize][b as usize];
    // Delta(F_a): F_{a\S} (x) F_{a_S} K_{-|a\S|}, q^{sum_{r notin S, s in S, r < s} (a_r, a_s)}
    let mut fparts: Vec<(Word, Word, Root, i64)> = Vec::new();
    let fl = m.f.len();
    for mask in 0u32..(1 << fl) {
        let mut e = 0;
        for s in 0..fl {
            if mask >> s & 1 == 1 {
                for r in 0..s {
                    if mask >> r & 1 == 0 {
                        e += pair(m.f[r], m.f[s]);
                    }
                }
            }
        }
        let (out, inn) = subset_split(&m.f, mask);
        let k = alg.word_degree(&out).neg();
        fparts.push((out, inn, k, e));
    }
    // Delta(E_b): K_{|b_S|} E_{b\S} (x) E_{b_S}, q^{-sum_{s in S, r notin S, r < s} (b_s, b_r)}
    let mut eparts: Vec<(Root, Word, Word, i64)> = Vec::new();
    let el = m.e.len();
    for mask in 0u32..(1 << el) {
        let mut e = 0;
        for s in 0..el {
            if mask >> s & 1 == 1 {
                for r in 0..s {
                    if mask >> r & 1 == 0 {
                        e -= pair(m.e[s], m.e[r]);
                    }
                }
            }
        }
        let (out, inn) = subset_split(&m.e, mask);
        let k = alg.word_degree(&inn);
        eparts.push((k, out, inn, e));
    }
    let mut acc: BTreeMap<(Mono, Mono), RationalFunction> = BTreeMap::new();
    for (fl_w, fr_w, fr_k, fe) in &fparts {
        let flr = se.reduce(fl_w).expect("word basis");
        let frr = se.reduce(fr_w).expect("word basis");
        for (el_k, el_w, er_w, ee) in &eparts {
            let elr = se.reduce(el_w).expect("word basis");
            let err = se.reduce(er_w).expect("word basis");
            let lk = m.k.add(el_k);
            let rk = fr_k.add(&m.k);
            let base = RationalFunction::q_pow(fe + ee);
            for (a, ca) in flr.iter() {
                for (b, cb) in elr.iter() {
                    let lm = Mono { f: a.clone(), k: lk.clone(), e: b.clone() };
                    let cl = &(&base * ca) * cb;
                    for (c, cc) in frr.iter() {
                        for (d, cd) in err.iter() {
                            let rm = Mono { f: c.clone(), k: rk.clone(), e: d.clone() };
                            let slot = acc.entry((lm.clone(), rm)).or_default();
                            *slot = &*slot + &(&(&cl * cc) * cd);
                        }
                    }
                }
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((l, r), c)| (l, r, c)).collect()
}

/// `Delta(x)` for `Delta(E) = E (x) 1 + K (x) E`, `Delta(F) = F (x) K^{-1} + 1 (x) F`.
pub fn coproduct<C: Scalar>(alg: &UqAlgebra, x: &Element<C>) -> TensorElement<C> {
    let mut out = TensorElement::zero();
    for (m, c) in x.terms() {
        for (l, r, s) in coproduct_mono(alg, m) {
            out.add_term(l, r, c.scale(&s));
        }
    }
    out
}

/// Product in `U (x) U`.
pub fn tensor_mul<C: Scalar>(alg: &UqAlgebra, a: &TensorElement<C>, b: &TensorElement<C>) -> TensorElement<C> {
    let mut out = TensorElement::zero();
    for ((l1, r1), c1) in a.terms() {
        for ((l2, r2), c2) in b.terms() {
            let c = c1.mul(c2);
            let ls = alg.mul_mono(l1, l2);
            let rs = alg.mul_mono(r1, r2);
            for (l, x) in &ls {
                let cx = c.scale(x);
                for (r, y) in &rs {
                    out.add_term(l.clone(), r.clone(), cx.scale(y));
                }
            }
        }
    }
    out
}

pub fn counit<C: Scalar>(x: &Element<C>) -> C {
    let mut acc = C::zero();
    for (m, c) in x.terms() {
        if m.f.is_empty() && m.e.is_empty() {
            acc = acc.add(c);
        }
    }
    acc
}

type Triple<C> = BTreeMap<(Mono, Mono, Mono), C>;

/// `(Delta (x) id) Delta(x)` and `(id (x) Delta) Delta(x)`.
pub fn double_coproducts<C: Scalar>(alg: &UqAlgebra, x: &Element<C>) -> (Triple<C>, Triple<C>) {
    let d = coproduct(alg, x);
    let mut left: Triple<C> = BTreeMap::new();
    let mut right: Triple<C> = BTreeMap::new();
    let put = |t: &mut Triple<C>, k: (Mono, Mono, Mono), c: C| {
        let slot = t.entry(k).or_insert_with(C::zero);
        *slot = slot.add(&c);
    };
    for ((l, r), c) in d.terms() {
        for (a, b, s) in coproduct_mono(alg, l) {
            put(&mut left, (a, b, r.clone()), c.scale(&s));
        }
        for (a, b, s) in coproduct_mono(alg, r) {
            put(&mut right, (l.clone(), a, b), c.scale(&s));
        }
    }
    left.retain(|_, c| !c.is_zero());
    right.retain(|_, c| !c.is_zero());
    (left, right)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RSide {
    R,
    RPrime,
}

fn homogeneous_plus(alg: &UqAlgebra, x: &Elem) -> Result<Root> {
    if !alg.is_in_u_plus(x) {
        return Err(Error::InvalidArgument("expected an element of U+".into()));
    }
    alg.weight(x).ok_or_else(|| Error::InvalidArgument("element is not homogeneous".into()))
}

/// `r_alpha(x)` or `r'_alpha(x)` for `x` in `U^+`, read off from the
/// coproduct components `r_alpha(x) K_alpha (x) E_alpha` and
/// `E_alpha K_{mu - alpha} (x) r'_alpha(x)`.
pub fn r_alpha(alg: &UqAlgebra, i: usize, x: &Elem, side: RSide) -> Result<Elem> {
    if x.is_zero() {
        return Ok(Elem::zero());
    }
    let mu = homogeneous_plus(alg, x)?;
    let rs = alg.root_system();
    let ai = rs.simple(i);
    let zero = rs.zero_root();
    let mut out = Elem::zero();
    let d = coproduct(alg, x);
    match side {
        RSide::R => {
            let target = Mono { f: vec![], k: zero.clone(), e: vec![i as u8] };
            // r(x) K_i = q^{(alpha_i, mu - alpha_i)} K_i r(x)
            let fix = rs.pairing(&ai, &mu.sub(&ai));
            for ((l, r), c) in d.terms() {
                if *r == target && l.f.is_empty() && l.k == ai {
                    out.add_term(Mono { f: vec![], k: zero.clone(), e: l.e.clone() }, c.mul_q_pow(fix));
                }
            }
        }
        RSide::RPrime => {
            let rest = mu.sub(&ai);
            // E_i K_nu = q^{-(nu, alpha_i)} K_nu E_i
            let fix = rs.pairing(&rest, &ai);
            for ((l, r), c) in d.terms() {
                if l.f.is_empty() && l.k == rest && l.e == [i as u8] && r.f.is_empty() && r.k.is_zero() {
                    out.add_term(r.clone(), c.mul_q_pow(fix));
                }
            }
        }
    }
    Ok(out)
}

fn shuffle_image(alg: &UqAlgebra, x: &Elem) -> ShuffleVec {
    let se = alg.shuffle_engine();
    let mut acc: ShuffleVec = BTreeMap::new();
    for (m, c) in x.terms() {
        assert!(c.is_polynomial(), "coefficients must be cleared of denominators");
        for (w, p) in se.psi(&m.e).iter() {
            let slot = acc.entry(w.clone()).or_default();
            *slot = &*slot + &(p * c.numerator());
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

/// The same maps computed in the shuffle algebra: `r_alpha` removes a last
/// letter, `r'_alpha` a first letter.
pub fn r_alpha_shuffle(alg: &UqAlgebra, i: usize, x: &Elem, side: RSide) -> Result<Elem> {
    if x.is_zero() {
        return Ok(Elem::zero());
    }
    let mu = homogeneous_plus(alg, x)?;
    if mu.0[i] == 0 {
        return Ok(Elem::zero());
    }
    // clear denominators so the shuffle image has Laurent coefficients
    let mut den = RationalFunction::one();
    for (_, c) in x.terms() {
        let d = RationalFunction::from_poly(c.denominator().clone());
        den = &den * &d;
    }
    let xs = x.scale(&den);
    let img = shuffle_image(alg, &xs);
    let mut cut: ShuffleVec = BTreeMap::new();
    for (w, c) in img {
        let ok = match side {
            RSide::R => w.last() == Some(&(i as u8)),
            RSide::RPrime => w.first() == Some(&(i as u8)),
        };
        if ok {
            let nw = match side {
                RSide::R => w[..w.len() - 1].to_vec(),
                RSide::RPrime => w[1..].to_vec(),
            };
            cut.insert(nw, c);
        }
    }
    cut.retain(|_, c| !c.is_zero());
    let deg = mu.sub(&alg.root_system().simple(i));
    let coords = alg.shuffle_engine().express(&deg.0, &cut)?;
    let inv = den.inv()?;
    let mut out = Elem::zero();
    for (w, c) in coords {
        out.add_term(Mono { f: vec![], k: alg.root_system().zero_root(), e: w }, &c * &inv);
    }
    Ok(out)
}

/// `r_alpha` on `U^-`, transported by the anti-automorphism `sigma`
/// (`E_i <-> F_i`, `K` fixed).
pub fn r_alpha_minus(alg: &UqAlgebra, i: usize, y: &Elem, side: RSide) -> Result<Elem> {
    if !alg.is_in_u_minus(y) {
        return Err(Error::InvalidArgument("expected an element of U-".into()));
    }
    let x = alg.sigma(y);
    Ok(alg.sigma(&r_alpha(alg, i, &x, side)?))
}

/// `r_{alpha_bar} = prod_k r_{alpha_k}^{i_k}` for pairwise orthogonal simple
/// roots, applied in the given order of simple indices.
pub fn r_bar_ordered(alg: &UqAlgebra, alpha_bar: &Root, order: &[usize], x: &Elem, side: RSide) -> Result<Elem> {
    let rs = alg.root_system();
    let supp: Vec<usize> = (0..rs.rank()).filter(|&k| alpha_bar.0[k] != 0).collect();
    if alpha_bar.0.iter().any(|&c| c < 0) {
        return Err(Error::InvalidArgument(format!("{alpha_bar} has negative coefficients")));
    }
    for (a, &i) in supp.iter().enumerate() {
        for &j in &supp[a + 1..] {
            if rs.form_matrix()[i][j] != 0 {
                return Err(Error::NotOrthogonal(rs.simple(i).to_string(), rs.simple(j).to_string()));
            }
        }
    }
    let mut cur = x.clone();
    for &k in order {
        for _ in 0..alpha_bar.0[k] {
            cur = r_alpha(alg, k, &cur, side)?;
        }
    }
    Ok(cur)
}

pub fn r_bar(alg: &UqAlgebra, alpha_bar: &Root, x: &Elem, side: RSide) -> Result<Elem> {
    let order: Vec<usize> = (0..alg.rank()).collect();
    r_bar_ordered(alg, alpha_bar, &order, x, side)
}

/// `c_alpha^i = q^{1-i} [i]` (simply laced).
pub fn c_alpha(i: u32) -> RationalFunction {
    q_number(i as i64, 1).mul_q_pow(1 - i as i64)
}

/// `z_alpha^i` with `z^1 = 1` and `z^i = z^{i-1} / (q^{i-1} [i])`.
pub fn z_alpha(i: u32) -> RationalFunction {
    let mut z = RationalFunction::one();
    for j in 2..=i as i64 {
        let d = q_number(j, 1).mul_q_pow(j - 1);
        z = z.checked_div(&d).expect("nonzero");
    }
    z
}

/// `s_alpha^i(x) = z_alpha^i r'^i_alpha(x)`.
pub fn s_alpha_pow(alg: &UqAlgebra, i: usize, pow: u32, x: &Elem) -> Result<Elem> {
    let mut cur = x.clone();
    for _ in 0..pow {
        cur = r_alpha(alg, i, &cur, RSide::RPrime)?;
    }
    Ok(cur.scale(&z_alpha(pow)))
}

/// `s_{alpha_bar} = z_{alpha_bar} r'_{alpha_bar}` with `z_{alpha_bar} = prod z_{alpha_k}^{i_k}`.
pub fn s_bar(alg: &UqAlgebra, alpha_bar: &Root, x: &Elem) -> Result<Elem> {
    let mut z = RationalFunction::one();
    for &c in &alpha_bar.0 {
        z = &z * &z_alpha(c as u32);
    }
    Ok(r_bar(alg, alpha_bar, x, RSide::RPrime)?.scale(&z))
}
