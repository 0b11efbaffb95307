//! Triangular right coideal subalgebras `psi(U^+[w+])_phi+ T_L U^-[w-]_phi-`,
//! Borel candidates and the tools used to test and classify them.

mod classify;
mod ede;
mod hilbert;
mod minuscule;
mod palm;
mod reflect;
mod table;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use classify::{candidate_rcs, classify_small, reference_families, CandidateClass, CandidateKind, Classification};
pub use ede::{ede_battery, Check, EdeReport, Verdict, CHECK_NAMES};
pub use hilbert::{induced_hilbert, induced_hilbert_brute, HilbertTable};
pub use minuscule::{
    is_nilpotent, matrix_commutator, minuscule_action, minuscule_commutator_probe, root_vector_probe, MinusculeProbe,
};
pub use palm::{
    all_palms, degenerate_palm_rcs, diamond, ladder, palm_predecessor, palm_word, shape_filter, v_element, PalmShape,
    PalmVerification, RelationCheck, ShapeReport, ShapeVerdict,
};
pub use reflect::{apply_t, t_v_reflect, tail_reflector, GeneratorMatch, ReflectReport};
pub use table::{commutator_table, default_twist, reference_table, reference_table_cases, parse_relation, CellCheck, CommutatorTable, ReferenceTable, TableCell};

use crate::coeff::{parse_symbolic, RationalFunction, Scalar, SymbolicScalar};
use crate::coideal::{character_shift, BarElement, Character, PbwAlgebra, Side};
use crate::error::{Error, Result};
use crate::rootsys::{parse_root, parse_word, Root, WeylWord};
use crate::uqalg::{Elem, SpanSolver, SymElem, UqAlgebra};

/// One shifted generator of a triangular RCS.
#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub label: String,
    pub root: Root,
    pub bar: BarElement,
}

impl Generator {
    pub fn shifted(&self) -> &SymElem {
        &self.bar.shifted
    }
}

/// `C = psi(U^+[w+])_{phi+} T_L U^-[w-]_{phi-}` with its shifted generators.
#[derive(Debug, Clone)]
pub struct TriangularRcs {
    pub w_plus: WeylWord,
    pub w_minus: WeylWord,
    pub phi_plus: Character,
    pub phi_minus: Character,
    pub l_basis: Vec<Root>,
    pub e_gens: Vec<Generator>,
    pub f_gens: Vec<Generator>,
}

impl TriangularRcs {
    pub fn e_gen(&self, root: &Root) -> Option<&Generator> {
        self.e_gens.iter().find(|g| &g.root == root)
    }

    pub fn f_gen(&self, root: &Root) -> Option<&Generator> {
        self.f_gens.iter().find(|g| &g.root == root)
    }

    /// `K_l` and `K_l^{-1}` for every basis vector of `L`.
    pub fn k_gens(&self, alg: &UqAlgebra) -> Vec<Generator> {
        let mut out = Vec::new();
        for l in &self.l_basis {
            for s in [1, -1] {
                let r = l.scale(s);
                let k: Elem = alg.k(&r);
                out.push(Generator {
                    label: format!("K[{r}]"),
                    root: r,
                    bar: BarElement { shifted: k.to_sym(), original: k },
                });
            }
        }
        out
    }

    /// Every generator: shifted `E`'s, `K`'s, shifted `F`'s.
    pub fn all_gens(&self, alg: &UqAlgebra) -> Vec<Generator> {
        let mut v = self.e_gens.clone();
        v.extend(self.k_gens(alg));
        v.extend(self.f_gens.iter().cloned());
        v
    }

    pub fn support(&self) -> BTreeSet<Root> {
        self.phi_plus.support().union(&self.phi_minus.support()).cloned().collect()
    }

    /// Non-degenerate: `Phi^+(w+) ∩ Phi^+(w-)` equals the common support.
    pub fn is_nondegenerate(&self, alg: &UqAlgebra) -> Result<bool> {
        let rs = alg.root_system();
        let a: BTreeSet<Root> = rs.inversion_set(&self.w_plus)?.into_iter().collect();
        let b: BTreeSet<Root> = rs.inversion_set(&self.w_minus)?.into_iter().collect();
        let common: BTreeSet<Root> = a.intersection(&b).cloned().collect();
        Ok(self.phi_plus.support() == self.phi_minus.support() && common == self.phi_plus.support())
    }

    /// Replaces every character symbol by a value, for fast numeric-free
    /// checks over Q(q).
    pub fn specialize(&self, values: &[RationalFunction]) -> Result<SpecializedRcs> {
        let conv = |g: &Generator| -> Result<(String, Root, Elem)> {
            Ok((g.label.clone(), g.root.clone(), g.bar.shifted.substitute(values)?))
        };
        Ok(SpecializedRcs {
            e: self.e_gens.iter().map(conv).collect::<Result<_>>()?,
            f: self.f_gens.iter().map(conv).collect::<Result<_>>()?,
        })
    }

    pub fn num_symbols(&self) -> usize {
        self.phi_plus
            .values
            .values()
            .chain(self.phi_minus.values.values())
            .map(|v| v.num_symbols())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for TriangularRcs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.l_basis.iter().map(|r| format!("K[{r}]")).collect();
        write!(
            f,
            "psi(U+[{}])_{} <{}> U-[{}]_{}",
            self.w_plus,
            self.phi_plus,
            l.join(", "),
            self.w_minus,
            self.phi_minus
        )
    }
}

/// Shifted generators with the character symbols replaced by values.
#[derive(Debug, Clone)]
pub struct SpecializedRcs {
    pub e: Vec<(String, Root, Elem)>,
    pub f: Vec<(String, Root, Elem)>,
}

/// The value of `lam lam'` for which `[E K^{-1} + lam K^{-1}, F + lam' K^{-1}]_{q_a^2}`
/// has no `K^{-2}` term, read off from the commutator itself.
pub fn weyl_constant(alg: &UqAlgebra, i: usize) -> Result<RationalFunction> {
    if i >= alg.rank() {
        return Err(Error::InvalidArgument(format!("no simple root with index {}", i + 1)));
    }
    let rs = alg.root_system();
    let d = rs.d(i);
    let kinv: SymElem = alg.k_simple(i, -1);
    let x = alg.mul(&alg.e(i), &kinv).add(&kinv.scale_by(&SymbolicScalar::lam(1)));
    let y = alg.f(i).add(&kinv.scale_by(&SymbolicScalar::lam(2)));
    let c = alg.q_commutator(&x, &y, &SymbolicScalar::q_pow(2 * d));
    let m = alg.k_simple::<SymbolicScalar>(i, -2).terms().next().unwrap().0.clone();
    let coef = c.coeff(&m);
    let comps = coef.components();
    let a = comps.get(&vec![1, 1]).cloned().unwrap_or_default();
    let b = comps.get(&Vec::new()).cloned().unwrap_or_default();
    if a.is_zero() || comps.len() > 2 {
        return Err(Error::Internal(format!("unexpected K^-2 coefficient {coef}")));
    }
    (-&b).checked_div(&a)
}

/// The two printed forms of the constant and whether each equals the
/// derived value.
pub fn weyl_constant_variants(alg: &UqAlgebra, i: usize) -> Result<Vec<(String, RationalFunction, bool)>> {
    let w = weyl_constant(alg, i)?;
    let q2 = RationalFunction::q_pow(2);
    let diff = crate::coeff::q_diff(1);
    let one = RationalFunction::one();
    let v1 = q2.checked_div(&(&(&one - &q2) * &diff))?;
    let v2 = q2.checked_div(&(&(&one - &RationalFunction::q_pow(-2)) * &diff))?;
    Ok(vec![
        ("q^2/((1-q^2)(q-q^-1))".to_string(), v1.clone(), v1 == w),
        ("q^2/((1-q^-2)(q-q^-1))".to_string(), v2.clone(), v2 == w),
    ])
}

/// Coordinates of `v` in the lattice spanned by `basis`, if it lies there.
pub fn lattice_coords(basis: &[Root], v: &Root) -> Option<Vec<i64>> {
    let r = v.rank();
    let m = basis.len();
    // augmented system: columns are basis vectors
    let mut rows: Vec<Vec<Rational64>> = (0..r)
        .map(|i| {
            let mut row: Vec<Rational64> = basis.iter().map(|b| Rational64::from_integer(b.0[i])).collect();
            row.push(Rational64::from_integer(v.0[i]));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..m {
        let Some(p) = (pr..r).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(pr, p);
        let inv = Rational64::one() / rows[pr][c];
        for x in rows[pr].iter_mut() {
            *x *= inv;
        }
        for i in 0..r {
            if i != pr && !rows[i][c].is_zero() {
                let f = rows[i][c];
                let src = rows[pr].clone();
                for (x, s) in rows[i].iter_mut().zip(&src) {
                    *x -= f * s;
                }
            }
        }
        pivots.push(c);
        pr += 1;
    }
    if rows[pr..].iter().any(|row| !row[m].is_zero()) {
        return None;
    }
    let mut out = vec![0i64; m];
    for (k, &c) in pivots.iter().enumerate() {
        let x = rows[k][m];
        if !x.is_integer() {
            return None;
        }
        out[c] = x.to_integer();
    }
    let check = basis.iter().zip(&out).fold(Root(vec![0; r]), |acc, (b, &c)| acc.add(&b.scale(c)));
    (check == *v).then_some(out)
}

fn label(prefix: &str, r: &Root) -> String {
    format!("{prefix}{}", r.index_label())
}

/// Builds the shifted generators; characters and `L` are validated, closure
/// is checked separately by [`check_closure`].
pub fn build_rcs(
    alg: &UqAlgebra,
    w_plus: &WeylWord,
    w_minus: &WeylWord,
    phi_plus: &Character,
    phi_minus: &Character,
    l_basis: &[Root],
) -> Result<TriangularRcs> {
    let rs = alg.root_system();
    for l in l_basis {
        if l.rank() != alg.rank() {
            return Err(Error::InvalidArgument(format!("lattice vector {l} has the wrong rank")));
        }
        for s in phi_plus.support().iter().chain(phi_minus.support().iter()) {
            if rs.pairing(l, s) != 0 {
                return Err(Error::NotOrthogonal(l.to_string(), s.to_string()));
            }
        }
    }
    let plus = PbwAlgebra::new(alg, Side::Plus, w_plus)?;
    let minus = PbwAlgebra::new(alg, Side::Minus, w_minus)?;
    let shift = |pbw: &PbwAlgebra, phi: &Character, prefix: &str| -> Result<Vec<Generator>> {
        pbw.roots()
            .iter()
            .zip(pbw.generators())
            .map(|(r, x)| Ok(Generator { label: label(prefix, r), root: r.clone(), bar: character_shift(pbw, phi, x)? }))
            .collect()
    };
    Ok(TriangularRcs {
        w_plus: w_plus.clone(),
        w_minus: w_minus.clone(),
        phi_plus: phi_plus.clone(),
        phi_minus: phi_minus.clone(),
        l_basis: l_basis.to_vec(),
        e_gens: shift(&plus, phi_plus, "E")?,
        f_gens: shift(&minus, phi_minus, "F")?,
    })
}

/// Characters with `phi+(E_b K_b^{-1}) = lam_j` and `phi-(F_b) = W / lam_j`
/// on the common support, `W` the Weyl constant; the `j`-th support root
/// (in root order) gets the symbol `lam_j`.
pub fn paired_characters(alg: &UqAlgebra, supp: &BTreeSet<Root>) -> Result<(Character, Character)> {
    let w = weyl_constant(alg, 0)?;
    let plus = Character::new(supp.iter().enumerate().map(|(j, r)| (r.clone(), SymbolicScalar::lam(j + 1))));
    let minus = Character::new(supp.iter().enumerate().map(|(j, r)| (r.clone(), SymbolicScalar::lam_partner(j + 1, &w))));
    Ok((plus, minus))
}

/// Integer basis of `S^⊥ ∩ Q` for a set of roots `S`.
pub fn orthogonal_lattice(alg: &UqAlgebra, supp: &BTreeSet<Root>) -> Vec<Root> {
    let rs = alg.root_system();
    let r = alg.rank();
    // rows: the linear forms mu -> (s, mu)
    let forms: Vec<Vec<i64>> = supp.iter().map(|s| (0..r).map(|i| rs.pairing(s, &rs.simple(i))).collect()).collect();
    integer_kernel(&forms, r)
}

/// A basis of the integer kernel `{x in Z^r : A x = 0}` via column-style
/// Hermite reduction.
fn integer_kernel(a: &[Vec<i64>], r: usize) -> Vec<Root> {
    // work on [A; I] and column-reduce A to echelon form
    let mut cols: Vec<(Vec<i64>, Vec<i64>)> = (0..r)
        .map(|j| {
            let top: Vec<i64> = a.iter().map(|row| row[j]).collect();
            let mut id = vec![0; r];
            id[j] = 1;
            (top, id)
        })
        .collect();
    let m = a.len();
    let mut start = 0;
    for row in 0..m {
        loop {
            let nz: Vec<usize> = (start..r).filter(|&j| cols[j].0[row] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&j) = nz.first() {
                    cols.swap(start, j);
                    start += 1;
                }
                break;
            }
            let &p = nz.iter().min_by_key(|&&j| cols[j].0[row].abs()).unwrap();
            let pv = cols[p].0[row];
            for &j in &nz {
                if j != p {
                    let f = cols[j].0[row] / pv;
                    let (pt, pi) = cols[p].clone();
                    for (x, y) in cols[j].0.iter_mut().zip(&pt) {
                        *x -= f * y;
                    }
                    for (x, y) in cols[j].1.iter_mut().zip(&pi) {
                        *x -= f * y;
                    }
                }
            }
        }
    }
    let mut out: Vec<Root> = cols[start..].iter().map(|(_, v)| Root(v.clone())).collect();
    for v in out.iter_mut() {
        if v.0.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
            *v = v.neg();
        }
    }
    out
}

/// `psi(U^+[w0])_{phi+} T_L U^-[prod_{a in c} s_a]_{phi-}` with `L = c^⊥`; the
/// reduced word of `w0` begins with the letters of `c`.
pub fn nondegenerate_borel(alg: &UqAlgebra, c: &[usize]) -> Result<TriangularRcs> {
    let rs = alg.root_system();
    let mut seen = BTreeSet::new();
    for &i in c {
        if i >= alg.rank() || !seen.insert(i) {
            return Err(Error::InvalidArgument(format!("bad simple root index {}", i + 1)));
        }
    }
    for (a, &i) in c.iter().enumerate() {
        for &j in &c[a + 1..] {
            if rs.pairing(&rs.simple(i), &rs.simple(j)) != 0 {
                return Err(Error::NotOrthogonal(rs.simple(i).to_string(), rs.simple(j).to_string()));
            }
        }
    }
    let supp: BTreeSet<Root> = c.iter().map(|&i| rs.simple(i)).collect();
    let (pp, pm) = paired_characters(alg, &supp)?;
    let mut sorted = c.to_vec();
    sorted.sort();
    let head = WeylWord(sorted);
    // reduced word of w0 starting with the support letters
    let w0 = rs.element(&rs.longest_element());
    let w_plus = head.concat(&rs.reduced_word_of(&rs.inverse(&rs.element(&head)).mul(&w0)));
    build_rcs(alg, &w_plus, &head, &pp, &pm, &orthogonal_lattice(alg, &supp))
}

/// Serialized description of a triangular RCS.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RcsSpec {
    #[serde(rename = "type")]
    pub cartan: String,
    pub rank: usize,
    pub w_plus: String,
    pub w_minus: String,
    pub supp_plus: Vec<String>,
    pub supp_minus: Vec<String>,
    /// Values of `phi+` on its support; roots only in `supp_minus` give
    /// `phi-` values. Roots in both supports get `phi- = W / phi+`.
    pub lambda: BTreeMap<String, String>,
    #[serde(rename = "L_basis")]
    pub l_basis: Vec<Vec<i64>>,
}

impl RcsSpec {
    pub fn algebra(&self) -> Result<UqAlgebra> {
        if self.cartan != "A" {
            return Err(Error::InvalidArgument(format!("only type A is supported, got {}", self.cartan)));
        }
        UqAlgebra::sl(self.rank + 1)
    }

    pub fn build(&self, alg: &UqAlgebra) -> Result<TriangularRcs> {
        let rs = alg.root_system();
        let r = alg.rank();
        let wp = parse_word(r, &self.w_plus)?;
        let wm = parse_word(r, &self.w_minus)?;
        let sp: BTreeSet<Root> = self.supp_plus.iter().map(|s| parse_root(rs, s)).collect::<Result<_>>()?;
        let sm: BTreeSet<Root> = self.supp_minus.iter().map(|s| parse_root(rs, s)).collect::<Result<_>>()?;
        let mut vals = BTreeMap::new();
        for (k, v) in &self.lambda {
            vals.insert(parse_root(rs, k)?, parse_symbolic(v)?);
        }
        let w = weyl_constant(alg, 0)?;
        let get = |rt: &Root| vals.get(rt).cloned().ok_or_else(|| Error::InvalidCharacter(format!("no value for {rt}")));
        let plus = Character::new(sp.iter().map(|rt| Ok((rt.clone(), get(rt)?))).collect::<Result<Vec<_>>>()?);
        let mut minus = Vec::new();
        for rt in &sm {
            let v = get(rt)?;
            minus.push((rt.clone(), if sp.contains(rt) { v.inv()?.scale(&w) } else { v }));
        }
        let l: Vec<Root> = self.l_basis.iter().map(|v| Root(v.clone())).collect();
        build_rcs(alg, &wp, &wm, &plus, &Character::new(minus), &l)
    }

    /// The spec of an RCS whose characters are plain symbols or constants.
    pub fn from_rcs(alg: &UqAlgebra, rcs: &TriangularRcs) -> RcsSpec {
        let w = |x: &WeylWord| x.letters().iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ");
        let mut lambda = BTreeMap::new();
        for (r, v) in &rcs.phi_plus.values {
            lambda.insert(r.to_string(), v.to_string());
        }
        for (r, v) in &rcs.phi_minus.values {
            if !rcs.phi_plus.values.contains_key(r) {
                lambda.insert(r.to_string(), v.to_string());
            }
        }
        RcsSpec {
            cartan: "A".into(),
            rank: alg.rank(),
            w_plus: w(&rcs.w_plus),
            w_minus: w(&rcs.w_minus),
            supp_plus: rcs.phi_plus.support().iter().map(|r| r.to_string()).collect(),
            supp_minus: rcs.phi_minus.support().iter().map(|r| r.to_string()).collect(),
            lambda,
            l_basis: rcs.l_basis.iter().map(|r| r.0.clone()).collect(),
        }
    }
}

/// Outcome of the closure check on generator pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosureReport {
    pub pairs_checked: usize,
    /// Pairs `(F_bar, E_bar)` whose product is outside the ordered span.
    pub failures: Vec<(String, String)>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn ordered_products(alg: &UqAlgebra, gens: &[(String, Root, Elem)], max_height: i64) -> Vec<(i64, Elem)> {
    // ordered monomials with total height bounded, height recorded
    let mut out: Vec<(i64, usize, Elem)> = vec![(0, 0, alg.one())];
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (h, start, x) in &frontier {
            for (k, (_, r, g)) in gens.iter().enumerate().skip(*start) {
                let nh = h + r.height();
                if nh <= max_height {
                    next.push((nh, k, alg.mul(x, g)));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter().map(|(h, _, x)| (h, x)).collect()
}

/// Checks that every product `F_bar E_bar` lies in the span of ordered
/// monomials `E_bar^a K_l F_bar^b`, `l in L`, with the character symbols set
/// to `1` (the shift values only rescale through a Hopf automorphism).
pub fn check_closure(alg: &UqAlgebra, rcs: &TriangularRcs) -> Result<ClosureReport> {
    let ones = vec![RationalFunction::one(); rcs.num_symbols()];
    let sp = rcs.specialize(&ones)?;
    let max_e = sp.e.iter().map(|g| g.1.height()).max().unwrap_or(0);
    let max_f = sp.f.iter().map(|g| g.1.height()).max().unwrap_or(0);
    let emons = ordered_products(alg, &sp.e, max_e);
    let fmons = ordered_products(alg, &sp.f, max_f);
    let mut failures = Vec::new();
    let mut checked = 0;
    for (fl, fr, fx) in &sp.f {
        for (el, er, ex) in &sp.e {
            checked += 1;
            let target = alg.mul(fx, ex);
            let target_weights: BTreeSet<Root> = target.terms().map(|(m, _)| m.k.clone()).collect();
            let mut vecs = Vec::new();
            for (_, a) in emons.iter().filter(|(h, _)| *h <= er.height()) {
                for (_, b) in fmons.iter().filter(|(h, _)| *h <= fr.height()) {
                    let ab = alg.mul(a, b);
                    let ws: BTreeSet<Root> = ab.terms().map(|(m, _)| m.k.clone()).collect();
                    let mut ls = BTreeSet::from([Root(vec![0; alg.rank()])]);
                    for t in &target_weights {
                        for s in &ws {
                            let d = t.sub(s);
                            if lattice_coords(&rcs.l_basis, &d).is_some() {
                                ls.insert(d);
                            }
                        }
                    }
                    for l in ls {
                        vecs.push(alg.product(&[a, &alg.k(&l), b]));
                    }
                }
            }
            if SpanSolver::new(&vecs).solve(&target).is_none() {
                failures.push((fl.clone(), el.clone()));
            }
        }
    }
    Ok(ClosureReport { pairs_checked: checked, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_rf;

    #[test]
    fn weyl_constant_matches_weyl_algebra_value() {
        let a = UqAlgebra::sl(2).unwrap();
        let w = weyl_constant(&a, 0).unwrap();
        assert_eq!(w, parse_rf("q^2/((1-q^2)*(q-q^-1))").unwrap());
        let v = weyl_constant_variants(&a, 0).unwrap();
        assert!(v[0].2 && !v[1].2);
        let a3 = UqAlgebra::sl(4).unwrap();
        for i in 0..3 {
            assert_eq!(weyl_constant(&a3, i).unwrap(), w);
        }
    }

    #[test]
    fn lattice_membership() {
        let b = vec![Root(vec![1, 2, 0]), Root(vec![0, 0, 1])];
        assert_eq!(lattice_coords(&b, &Root(vec![2, 4, -1])), Some(vec![2, -1]));
        assert_eq!(lattice_coords(&b, &Root(vec![1, 1, 0])), None);
        assert_eq!(lattice_coords(&[Root(vec![2, 0])], &Root(vec![1, 0])), None);
        assert_eq!(lattice_coords(&[], &Root(vec![0, 0])), Some(vec![]));
    }

    #[test]
    fn orthogonal_lattices() {
        let a = UqAlgebra::sl(4).unwrap();
        let rs = a.root_system();
        let s: BTreeSet<Root> = [rs.simple(0)].into();
        let l = orthogonal_lattice(&a, &s);
        assert_eq!(l.len(), 2);
        for v in &l {
            assert_eq!(rs.pairing(v, &rs.simple(0)), 0);
        }
        assert!(lattice_coords(&l, &Root(vec![1, 2, 0])).is_some());
        assert!(lattice_coords(&l, &Root(vec![0, 0, 1])).is_some());
        let s2: BTreeSet<Root> = [rs.simple(0), rs.simple(2)].into();
        let l2 = orthogonal_lattice(&a, &s2);
        assert_eq!(l2, vec![Root(vec![1, 2, 1])]);
    }

    #[test]
    fn sl2_weyl_algebra_generators() {
        let a = UqAlgebra::sl(2).unwrap();
        let c = nondegenerate_borel(&a, &[0]).unwrap();
        assert!(c.l_basis.is_empty());
        assert_eq!(c.e_gens[0].shifted(), &a.parse_sym("E1 K1^-1 + lam1 K1^-1").unwrap());
        let w = weyl_constant(&a, 0).unwrap();
        let expect = a.f::<SymbolicScalar>(0).add(&a.k_simple(0, -1).scale_by(&SymbolicScalar::lam_partner(1, &w)));
        assert_eq!(c.f_gens[0].shifted(), &expect);
        assert!(check_closure(&a, &c).unwrap().passed());
    }

    #[test]
    fn sl3_closure() {
        let a = UqAlgebra::sl(3).unwrap();
        let c = nondegenerate_borel(&a, &[0]).unwrap();
        assert_eq!(c.l_basis, vec![Root(vec![1, 2])]);
        let r = check_closure(&a, &c).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn spec_round_trip() {
        let a = UqAlgebra::sl(3).unwrap();
        let c = nondegenerate_borel(&a, &[0]).unwrap();
        let s = RcsSpec::from_rcs(&a, &c);
        let json = serde_json::to_string(&s).unwrap();
        let back: RcsSpec = serde_json::from_str(&json).unwrap();
        let c2 = back.build(&a).unwrap();
        assert_eq!(c2.e_gens, c.e_gens);
        assert_eq!(c2.f_gens, c.f_gens);
    }
}
