use crate::coeff::{RationalFunction, Scalar};
use crate::error::{Error, Result};
use crate::rootsys::Root;

use super::{Elem, Element, UqAlgebra};

/// `T_i` or `T_i^{-1}` on a generator image level:
///
/// * `T_i(E_i) = -F_i K_i`, `T_i(F_i) = -K_i^{-1} E_i`,
///   `T_i(E_j) = E_i E_j - q^{-1} E_j E_i`, `T_i(F_j) = F_j F_i - q F_i F_j`;
/// * `T_i^{-1}(E_i) = -K_i^{-1} F_i`, `T_i^{-1}(F_i) = -E_i K_i`,
///   `T_i^{-1}(E_j) = E_j E_i - q^{-1} E_i E_j`, `T_i^{-1}(F_j) = F_i F_j - q F_j F_i`
///
/// for adjacent `j`; non-adjacent generators are fixed.
pub(super) fn apply_t<C: Scalar>(a: &UqAlgebra, i: usize, x: &Element<C>, inverse: bool) -> Element<C> {
    let rs = a.root_system();
    let cm = rs.cartan_matrix();
    let qm1 = C::from_rf(RationalFunction::q_pow(-1));
    let qp1 = C::from_rf(RationalFunction::q_pow(1));
    let img_e = |j: usize| -> Element<C> {
        let (ei, ej) = (a.e::<C>(i), a.e::<C>(j));
        if j == i {
            let r = if inverse { a.mul(&a.k_simple(i, -1), &a.f(i)) } else { a.mul(&a.f(i), &a.k_simple(i, 1)) };
            r.neg()
        } else if cm[i][j] == 0 {
            ej
        } else if inverse {
            a.mul(&ej, &ei).sub(&a.mul(&ei, &ej).scale_by(&qm1))
        } else {
            a.mul(&ei, &ej).sub(&a.mul(&ej, &ei).scale_by(&qm1))
        }
    };
    let img_f = |j: usize| -> Element<C> {
        let (fi, fj) = (a.f::<C>(i), a.f::<C>(j));
        if j == i {
            let r = if inverse { a.mul(&a.e(i), &a.k_simple(i, 1)) } else { a.mul(&a.k_simple(i, -1), &a.e(i)) };
            r.neg()
        } else if cm[i][j] == 0 {
            fj
        } else if inverse {
            a.mul(&fi, &fj).sub(&a.mul(&fj, &fi).scale_by(&qp1))
        } else {
            a.mul(&fj, &fi).sub(&a.mul(&fi, &fj).scale_by(&qp1))
        }
    };
    let img_k = |mu: &Root| a.k::<C>(&reflect(a, i, mu));
    a.map_generators(x, &img_e, &img_f, &img_k, false)
}

fn reflect(a: &UqAlgebra, i: usize, mu: &Root) -> Root {
    a.root_system().reflect(i, mu)
}

pub(super) fn root_vectors(a: &UqAlgebra, word: &[usize], f_side: bool) -> Result<Vec<(Root, Elem)>> {
    let rs = a.root_system();
    let w = crate::rootsys::WeylWord(word.to_vec());
    if word.iter().any(|&i| i >= a.rank()) {
        return Err(Error::InvalidArgument(format!("letter out of range in {w}")));
    }
    if !rs.is_reduced(&w) {
        return Err(Error::InvalidArgument(format!("{w} is not reduced")));
    }
    let betas = rs.beta_sequence(&w);
    let mut out = Vec::with_capacity(word.len());
    for (k, beta) in betas.into_iter().enumerate() {
        let mut x: Elem = if f_side { a.f(word[k]) } else { a.e(word[k]) };
        for &i in word[..k].iter().rev() {
            x = apply_t(a, i, &x, f_side);
        }
        let ok = if f_side { a.is_in_u_minus(&x) } else { a.is_in_u_plus(&x) };
        let expected = if f_side { beta.neg() } else { beta.clone() };
        if !ok || a.weight(&x) != Some(expected) {
            return Err(Error::Internal(format!("root vector for {beta} left the expected degree")));
        }
        out.push((beta, x));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let a = UqAlgebra::sl(3).unwrap();
        let x = a.parse("E1 E2 + F2 K[a1] - (q) F1 E1").unwrap();
        for i in 0..2 {
            assert_eq!(a.lusztig_t_inv(i, &a.lusztig_t(i, &x)), x);
            assert_eq!(a.lusztig_t(i, &a.lusztig_t_inv(i, &x)), x);
        }
    }

    #[test]
    fn sl3_root_vectors() {
        let a = UqAlgebra::sl(3).unwrap();
        let es = a.root_vectors_e(&[0, 1, 0]).unwrap();
        assert_eq!(es[1].1, a.parse("E1 E2 - (q^-1) E2 E1").unwrap());
        assert_eq!(es[2].1, a.e(1));
        let fs = a.root_vectors_f(&[0, 1, 0]).unwrap();
        assert_eq!(fs[1].1, a.parse("F1 F2 - (q) F2 F1").unwrap());
        assert_eq!(fs[2].1, a.f(1));
    }

    #[test]
    fn braid_relation() {
        let a = UqAlgebra::sl(3).unwrap();
        let x = a.parse("E1 F2 + K[a2] E2").unwrap();
        let lhs = a.lusztig_t(0, &a.lusztig_t(1, &a.lusztig_t(0, &x)));
        let rhs = a.lusztig_t(1, &a.lusztig_t(0, &a.lusztig_t(1, &x)));
        assert_eq!(lhs, rhs);
    }
}
