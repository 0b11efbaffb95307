//! The vector representation `V(lambda_1)` of `U_q(sl_{n+1})` as a probe for
//! non-nilpotent commutators.

use serde::Serialize;

use crate::coeff::{RationalFunction, Scalar};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Root};
use crate::uqalg::{rep_eval, Elem, Element, RepMatrix, UqAlgebra};

/// Matrix of `x` on the basis `v_k = v_{lambda_1 - alpha_1 - ... - alpha_k}`,
/// `k = 0..=n`; `F_{k+1} v_k = v_{k+1}` and `E_{k+1} v_{k+1} = v_k`.
pub fn minuscule_action<C: Scalar>(alg: &UqAlgebra, x: &Element<C>) -> Result<RepMatrix<C>> {
    if alg.root_system().cartan_type() != CartanType::A {
        return Err(Error::Precondition("the minuscule module is only built in type A".into()));
    }
    rep_eval(alg, x, 1)
}

/// `a b - b a` on matrices.
pub fn matrix_commutator<C: Scalar>(a: &RepMatrix<C>, b: &RepMatrix<C>) -> RepMatrix<C> {
    let ab = a.mul(b);
    let ba = b.mul(a);
    let columns = ab
        .columns
        .iter()
        .zip(&ba.columns)
        .map(|(x, y)| {
            let mut col = x.clone();
            for (r, v) in y {
                let e = col.entry(*r).or_insert_with(C::zero);
                *e = e.sub(v);
            }
            col.retain(|_, v| !v.is_zero());
            col
        })
        .collect();
    RepMatrix { dim: ab.dim, columns }
}

pub fn is_nilpotent<C: Scalar>(m: &RepMatrix<C>) -> bool {
    let mut p = m.clone();
    for _ in 0..m.dim {
        if p.is_zero() {
            return true;
        }
        p = p.mul(m);
    }
    p.is_zero()
}

/// Outcome of evaluating `[E_mu K_mu^{-1}, F_mu]_1` on `v_{mu_1 - 1}`.
#[derive(Debug, Clone, Serialize)]
pub struct MinusculeProbe {
    pub root: String,
    /// Index `k` of the probed basis vector `v_k`.
    pub vector: usize,
    pub is_eigenvector: bool,
    pub eigenvalue: String,
    pub nilpotent: bool,
}

impl MinusculeProbe {
    /// The commutator has a nonzero eigenvalue, so it cannot act nilpotently.
    pub fn detects(&self) -> bool {
        self.is_eigenvector && !self.nilpotent
    }
}

/// Evaluates `[e, f]_1` on `V(lambda_1)` at the vector `v_{mu_1 - 1}`, where
/// `e`, `f` are elements of degree `mu`, `-mu`.
pub fn minuscule_commutator_probe(alg: &UqAlgebra, mu: &Root, e: &Elem, f: &Elem) -> Result<MinusculeProbe> {
    let rs = alg.root_system();
    let (m1, _) = rs
        .interval(mu)
        .ok_or_else(|| Error::InvalidArgument(format!("{mu} is not a positive root of type A")))?;
    let c = matrix_commutator(&minuscule_action(alg, e)?, &minuscule_action(alg, f)?);
    let k = m1 - 1;
    let col = &c.columns[k];
    let diag = c.entry(k, k);
    Ok(MinusculeProbe {
        root: rs.format_root(mu),
        vector: k,
        is_eigenvector: col.keys().all(|&r| r == k),
        eigenvalue: diag.to_string(),
        nilpotent: is_nilpotent(&c),
    })
}

/// [`minuscule_commutator_probe`] for the unshifted `E_mu K_mu^{-1}` and
/// `F_mu` taken from a reduced word of `w_0`.
pub fn root_vector_probe(alg: &UqAlgebra, mu: &Root) -> Result<MinusculeProbe> {
    let w0 = alg.root_system().longest_element();
    let pick = |v: Vec<(Root, Elem)>| {
        v.into_iter()
            .find(|(r, _)| r == mu)
            .map(|(_, x)| x)
            .ok_or_else(|| Error::InvalidArgument(format!("{mu} is not a positive root")))
    };
    let e = pick(alg.root_vectors_e(&w0.0)?)?;
    let f = pick(alg.root_vectors_f(&w0.0)?)?;
    let ek = alg.mul(&e, &alg.k::<RationalFunction>(&mu.neg()));
    minuscule_commutator_probe(alg, mu, &ek, &f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::parse_root;

    #[test]
    fn highest_vector_weight() {
        let a = UqAlgebra::sl(3).unwrap();
        let m = minuscule_action(&a, &a.k_simple::<RationalFunction>(0, 1)).unwrap();
        assert_eq!(m.entry(0, 0), RationalFunction::q_pow(1));
        assert_eq!(m.entry(1, 1), RationalFunction::q_pow(-1));
        assert_eq!(m.entry(2, 2), RationalFunction::one());
    }

    #[test]
    fn simple_actions() {
        let a = UqAlgebra::sl(4).unwrap();
        let f2 = minuscule_action(&a, &a.f::<RationalFunction>(1)).unwrap();
        assert_eq!(f2.entry(2, 1), RationalFunction::one());
        assert_eq!(f2.columns[0].len(), 0);
        let e2 = minuscule_action(&a, &a.e::<RationalFunction>(1)).unwrap();
        assert_eq!(e2.entry(1, 2), RationalFunction::one());
    }

    #[test]
    fn every_root_gives_an_eigenvector() {
        for n in 2..=4 {
            let a = UqAlgebra::sl(n).unwrap();
            for mu in a.root_system().positive_roots() {
                let p = root_vector_probe(&a, mu).unwrap();
                assert!(p.detects(), "{n} {mu}: {p:?}");
            }
        }
        let a = UqAlgebra::sl(3).unwrap();
        let mu = parse_root(a.root_system(), "a1+a2").unwrap();
        let p = root_vector_probe(&a, &mu).unwrap();
        assert_eq!(p.vector, 0);
    }
}
