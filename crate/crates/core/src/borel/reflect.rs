//! Reflecting a triangular RCS by a Lusztig automorphism `T_v`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::table::proportional;
use super::{build_rcs, TriangularRcs};
use crate::coeff::SymbolicScalar;
use crate::coideal::{Character, PbwAlgebra, Side};
use crate::error::{Error, Result};
use crate::rootsys::{Root, WeylWord};
use crate::uqalg::{SymElem, UqAlgebra};

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorMatch {
    pub source: String,
    pub target: String,
    /// `c` with `T_v(X) = c Y` for the unshifted generators.
    pub factor: String,
    pub matched: bool,
}

#[derive(Debug, Clone)]
pub struct ReflectReport {
    pub v: WeylWord,
    pub target: TriangularRcs,
    pub matches: Vec<GeneratorMatch>,
}

impl ReflectReport {
    pub fn passed(&self) -> bool {
        self.matches.iter().all(|m| m.matched)
    }
}

/// `T_v = T_{j_1} ... T_{j_m}` for `v = s_{j_1} ... s_{j_m}`.
pub fn apply_t(alg: &UqAlgebra, v: &WeylWord, x: &SymElem) -> SymElem {
    v.0.iter().rev().fold(x.clone(), |acc, &j| alg.lusztig_t(j, &acc))
}

/// The `v` with `w- = v^{-1} x` where the letters of `x` carry exactly the
/// support of `phi-` (read off the stored reduced word of `w-`).
pub fn tail_reflector(alg: &UqAlgebra, rcs: &TriangularRcs) -> Result<WeylWord> {
    let rs = alg.root_system();
    let betas = rs.inversion_set(&rcs.w_minus)?;
    let supp = rcs.phi_minus.support();
    let m = betas.len() - supp.len();
    let tail: BTreeSet<Root> = betas[m..].iter().cloned().collect();
    if tail != supp {
        return Err(Error::Precondition(format!("the support of phi- is not a tail of {}", rcs.w_minus)));
    }
    Ok(WeylWord(rcs.w_minus.0[..m].to_vec()).reversed())
}

/// Applies `T_v` to every shifted generator of `rcs` and compares with the
/// generators of `psi(U^+[v w+])_{phi+ o T_v^{-1}} T_{vL} U^-[x]_{phi- o T_v^{-1}}`
/// where `w- = v^{-1} x`.
pub fn t_v_reflect(alg: &UqAlgebra, rcs: &TriangularRcs, v: &WeylWord) -> Result<ReflectReport> {
    let rs = alg.root_system();
    let m = v.len();
    let vinv = v.reversed();
    if rcs.w_minus.len() < m || rcs.w_minus.0[..m] != vinv.0[..] {
        return Err(Error::Precondition(format!("{vinv} is not a prefix of {}", rcs.w_minus)));
    }
    let plus_word = v.concat(&rcs.w_plus);
    if !rs.is_reduced(&plus_word) {
        return Err(Error::Precondition(format!("{plus_word} is not reduced")));
    }
    let minus_word = WeylWord(rcs.w_minus.0[m..].to_vec());
    let src_plus = PbwAlgebra::new(alg, Side::Plus, &rcs.w_plus)?;
    let src_minus = PbwAlgebra::new(alg, Side::Minus, &rcs.w_minus)?;
    let tgt_plus = PbwAlgebra::new(alg, Side::Plus, &plus_word)?;
    let tgt_minus = PbwAlgebra::new(alg, Side::Minus, &minus_word)?;
    for r in &src_minus.roots()[..m] {
        if rcs.phi_minus.support().contains(r) {
            return Err(Error::Precondition(format!("support root {} lies in the reflected prefix", rs.format_root(r))));
        }
    }

    // (source label, image of unshifted, image of shifted, target side, target root, factor)
    struct Image {
        label: String,
        shifted: SymElem,
        plus: bool,
        root: Root,
        factor: SymbolicScalar,
    }
    let ve = rs.element(v);
    let mut images = Vec::new();
    let mut plus_vals = Vec::new();
    let mut minus_vals = Vec::new();
    let sources = rcs
        .e_gens
        .iter()
        .zip(src_plus.generators())
        .map(|(g, x)| (g, x, rcs.phi_plus.value(&g.root)))
        .chain(rcs.f_gens.iter().zip(src_minus.generators()).map(|(g, x)| (g, x, rcs.phi_minus.value(&g.root))));
    for (g, x, val) in sources {
        let tx = apply_t(alg, v, &x.to_sym());
        let wt = alg.weight(&tx).ok_or_else(|| Error::Internal(format!("T_v({}) is not homogeneous", g.label)))?;
        let (plus, root) = if wt.is_positive() { (true, wt) } else { (false, wt.neg()) };
        debug_assert_eq!(root, {
            let r = ve.apply(&g.root);
            if r.is_positive() {
                r
            } else {
                r.neg()
            }
        });
        let y = if plus { tgt_plus.generator_for(&root) } else { tgt_minus.generator_for(&root) }
            .ok_or_else(|| Error::Internal(format!("no target generator for {}", rs.format_root(&root))))?;
        let c = proportional(&tx, &y.to_sym())
            .ok_or_else(|| Error::Internal(format!("T_v({}) is not a multiple of a target root vector", g.label)))?;
        if !val.is_zero() {
            let cv = c.as_rf().ok_or_else(|| Error::Internal("symbolic rescaling factor".into()))?;
            let tv = val.scale(&cv.inv()?);
            if plus {
                plus_vals.push((root.clone(), tv));
            } else {
                minus_vals.push((root.clone(), tv));
            }
        }
        images.push(Image { label: g.label.clone(), shifted: apply_t(alg, v, g.shifted()), plus, root, factor: c });
    }
    let lattice: Vec<Root> = rcs.l_basis.iter().map(|l| ve.apply(l)).collect();
    let target = build_rcs(
        alg,
        &plus_word,
        &minus_word,
        &Character::new(plus_vals),
        &Character::new(minus_vals),
        &lattice,
    )?;
    let matches = images
        .into_iter()
        .map(|im| {
            let tg = if im.plus { target.e_gen(&im.root) } else { target.f_gen(&im.root) }.expect("target generator");
            let matched = im.shifted.sub(&tg.shifted().scale_by(&im.factor)).is_zero();
            GeneratorMatch { source: im.label, target: tg.label.clone(), factor: im.factor.to_string(), matched }
        })
        .collect();
    Ok(ReflectReport { v: v.clone(), target, matches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::{nondegenerate_borel, paired_characters};
    use crate::rootsys::{parse_root, parse_word};

    fn sl3_second() -> (UqAlgebra, TriangularRcs) {
        let a = UqAlgebra::sl(3).unwrap();
        let s: BTreeSet<Root> = [parse_root(a.root_system(), "a1+a2").unwrap()].into();
        let (p, m) = paired_characters(&a, &s).unwrap();
        let rcs = build_rcs(
            &a,
            &parse_word(2, "s1 s2").unwrap(),
            &parse_word(2, "s2 s1").unwrap(),
            &p,
            &m,
            &[Root(vec![1, -1])],
        )
        .unwrap();
        (a, rcs)
    }

    #[test]
    fn identity_keeps_everything() {
        let (a, rcs) = sl3_second();
        let r = t_v_reflect(&a, &rcs, &WeylWord::identity()).unwrap();
        assert!(r.passed());
        for (x, y) in rcs.e_gens.iter().zip(&r.target.e_gens) {
            assert_eq!(x.shifted(), y.shifted());
        }
    }

    #[test]
    fn second_sl3_class_reflects_to_standard_position() {
        let (a, rcs) = sl3_second();
        let v = tail_reflector(&a, &rcs).unwrap();
        assert_eq!(v, parse_word(2, "s2").unwrap());
        let r = t_v_reflect(&a, &rcs, &v).unwrap();
        assert!(r.passed(), "{:?}", r.matches);
        let t = &r.target;
        assert_eq!(a.root_system().element(&t.w_plus), a.root_system().element(&a.root_system().longest_element()));
        assert_eq!(t.w_minus, parse_word(2, "s1").unwrap());
        assert_eq!(t.l_basis, vec![Root(vec![1, 2])]);
        assert!(t.is_nondegenerate(&a).unwrap());
        // same shape as the directly constructed family
        let direct = nondegenerate_borel(&a, &[0]).unwrap();
        assert_eq!(direct.support(), t.support());
    }

    #[test]
    fn prefix_is_required() {
        let (a, rcs) = sl3_second();
        assert!(t_v_reflect(&a, &rcs, &parse_word(2, "s1").unwrap()).is_err());
    }
}
