use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use super::{coproduct, s_bar};
use crate::coeff::{parse_symbolic, RationalFunction, Scalar, SymbolicScalar};
use crate::error::{Error, Result};
use crate::rootsys::{parse_root, Root, WeylWord};
use crate::uqalg::{Elem, SpanSolver, SymElem, UqAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    /// `psi(U^+[w])`, generated by `E_beta K_beta^{-1}`.
    Plus,
    /// `U^-[w]`, generated by `F_beta`.
    Minus,
}

/// A character given by its values on the PBW generators of its support.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Character {
    pub values: BTreeMap<Root, SymbolicScalar>,
}

impl Character {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn new(values: impl IntoIterator<Item = (Root, SymbolicScalar)>) -> Self {
        Character { values: values.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn support(&self) -> BTreeSet<Root> {
        self.values.keys().cloned().collect()
    }

    pub fn value(&self, r: &Root) -> SymbolicScalar {
        self.values.get(r).cloned().unwrap_or_default()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(r, v)| format!("{r}: {v}")).collect();
        write!(f, "phi{{{}}}", parts.join(", "))
    }
}

/// Parses `phi{a1: lam1, a3: (q^2)/(1 - q^2)}`.
pub fn parse_character(alg: &UqAlgebra, s: &str) -> Result<Character> {
    let s = s.trim().trim_end_matches('.');
    let body = s
        .strip_prefix("phi{")
        .and_then(|b| b.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("character literal must look like phi{{...}}: {s:?}")))?;
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, c) in body.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&body[start..]);
    let mut values = BTreeMap::new();
    for p in parts.into_iter().filter(|p| !p.trim().is_empty()) {
        let (r, v) = p.split_once(':').ok_or_else(|| Error::Parse(format!("missing ':' in {p:?}")))?;
        let root = parse_root(alg.root_system(), r.trim())?;
        let val = parse_symbolic(v.trim())?;
        if values.insert(root.clone(), val).is_some() {
            return Err(Error::Parse(format!("duplicate root {root}")));
        }
    }
    Ok(Character::new(values))
}

/// The literal twist `psi(x_beta) = q^{-(beta, beta)/2} x_beta K_beta^{-1}`.
pub fn psi(alg: &UqAlgebra, x: &Elem, beta: &Root) -> Elem {
    let rs = alg.root_system();
    let e = -rs.pairing(beta, beta) / 2;
    alg.mul(x, &alg.k(&beta.neg())).scale(&RationalFunction::q_pow(e))
}

/// A shifted generator together with its unshifted original.
#[derive(Debug, Clone, PartialEq)]
pub struct BarElement {
    pub original: Elem,
    pub shifted: SymElem,
}

type DegreeSolver = Arc<(Vec<Vec<u32>>, SpanSolver)>;

/// The algebra `psi(U^+[w])` or `U^-[w]` with its ordered PBW generators.
pub struct PbwAlgebra<'a> {
    alg: &'a UqAlgebra,
    side: Side,
    word: WeylWord,
    roots: Vec<Root>,
    gens: Vec<Elem>,
    solvers: Mutex<HashMap<Root, DegreeSolver>>,
}

impl fmt::Debug for PbwAlgebra<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PbwAlgebra({:?}, {})", self.side, self.word)
    }
}

impl<'a> PbwAlgebra<'a> {
    pub fn new(alg: &'a UqAlgebra, side: Side, word: &WeylWord) -> Result<Self> {
        let (roots, gens) = match side {
            Side::Plus => {
                let rv = alg.root_vectors_e(word.letters())?;
                rv.into_iter().map(|(b, x)| { let g = alg.mul(&x, &alg.k(&b.neg())); (b, g) }).unzip()
            }
            Side::Minus => alg.root_vectors_f(word.letters())?.into_iter().unzip(),
        };
        Ok(PbwAlgebra { alg, side, word: word.clone(), roots, gens, solvers: Mutex::new(HashMap::new()) })
    }

    pub fn algebra(&self) -> &'a UqAlgebra {
        self.alg
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn word(&self) -> &WeylWord {
        &self.word
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn generator_for(&self, beta: &Root) -> Option<&Elem> {
        self.roots.iter().position(|r| r == beta).map(|k| &self.gens[k])
    }

    /// Exponent vectors `a` with `sum a_k beta_k = deg`.
    pub fn multi_indices(&self, deg: &Root) -> Vec<Vec<u32>> {
        fn rec(roots: &[Root], k: usize, rest: &Root, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if rest.is_zero() {
                let mut v = cur.clone();
                v.resize(roots.len(), 0);
                out.push(v);
                return;
            }
            if k == roots.len() {
                return;
            }
            let mut r = rest.clone();
            let mut a = 0;
            loop {
                cur.push(a);
                rec(roots, k + 1, &r, cur, out);
                cur.pop();
                r = r.sub(&roots[k]);
                a += 1;
                if r.0.iter().any(|&c| c < 0) {
                    break;
                }
            }
        }
        let mut out = Vec::new();
        if deg.0.iter().any(|&c| c < 0) {
            return out;
        }
        rec(&self.roots, 0, deg, &mut Vec::new(), &mut out);
        out
    }

    /// Ordered product `prod_k X_{beta_k}^{a_k}`.
    pub fn monomial(&self, a: &[u32]) -> Elem {
        let mut out = self.alg.one();
        for (k, &e) in a.iter().enumerate() {
            for _ in 0..e {
                out = self.alg.mul(&out, &self.gens[k]);
            }
        }
        out
    }

    fn solver(&self, deg: &Root) -> DegreeSolver {
        if let Some(s) = self.solvers.lock().unwrap().get(deg) {
            return s.clone();
        }
        let idx = self.multi_indices(deg);
        let vecs: Vec<Elem> = idx.iter().map(|a| self.monomial(a)).collect();
        let s = Arc::new((idx, SpanSolver::new(&vecs)));
        self.solvers.lock().unwrap().insert(deg.clone(), s.clone());
        s
    }

    /// The positive degree of a homogeneous element of this algebra.
    pub fn degree_of<C: Scalar>(&self, x: &crate::uqalg::Element<C>) -> Option<Root> {
        let w = self.alg.weight(x)?;
        Some(match self.side {
            Side::Plus => w,
            Side::Minus => w.neg(),
        })
    }

    /// Coordinates of `x` in the ordered PBW basis.
    pub fn express<C: Scalar>(&self, x: &crate::uqalg::Element<C>) -> Option<Vec<(Vec<u32>, C)>> {
        if x.is_zero() {
            return Some(vec![]);
        }
        let deg = self.degree_of(x)?;
        let s = self.solver(&deg);
        let c = s.1.solve(x)?;
        Some(s.0.iter().cloned().zip(c).filter(|(_, c)| !c.is_zero()).collect())
    }

    pub fn contains(&self, x: &Elem) -> bool {
        self.express(x).is_some()
    }

    /// Checks that the support is an admissible character support: roots of
    /// `Phi^+(w)`, pairwise orthogonal, and an element of `T^w`.
    pub fn validate(&self, phi: &Character) -> Result<()> {
        if phi.values.is_empty() {
            return Ok(());
        }
        let supp = phi.support();
        for r in &supp {
            if !self.roots.contains(r) {
                return Err(Error::InvalidCharacter(format!("{r} is not a root of {}", self.word)));
            }
        }
        let tw = self.alg.root_system().t_w_sets(&self.word)?;
        if !tw.contains(&supp) {
            return Err(Error::InvalidCharacter(format!(
                "support {{{}}} is not in T^w for w = {}",
                supp.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "),
                self.word
            )));
        }
        Ok(())
    }

    /// `phi(x)` for `x` in this algebra; `phi` is multiplicative on ordered
    /// PBW monomials.
    pub fn evaluate(&self, phi: &Character, x: &Elem) -> Result<SymbolicScalar> {
        if let Some(c) = x.as_scalar() {
            return Ok(SymbolicScalar::from_rf(c));
        }
        let deg = self.degree_of(x).ok_or_else(|| Error::NotInSpan(format!("{x} is not homogeneous")))?;
        let idx = self.multi_indices(&deg);
        let in_support = |a: &Vec<u32>| a.iter().zip(&self.roots).all(|(&e, r)| e == 0 || phi.values.contains_key(r));
        if !idx.iter().any(in_support) {
            return Ok(SymbolicScalar::zero());
        }
        let coords = self.express(x).ok_or_else(|| Error::NotInSpan(format!("{x} is not in the algebra")))?;
        let mut acc = SymbolicScalar::zero();
        for (a, c) in coords {
            if !in_support(&a) {
                continue;
            }
            let mut v = SymbolicScalar::from_rf(c);
            for (k, &e) in a.iter().enumerate() {
                for _ in 0..e {
                    v = v.mul(&phi.value(&self.roots[k]));
                }
            }
            acc = acc.add(&v);
        }
        Ok(acc)
    }
}

/// `X_bar = (phi (x) id) Delta(X)` computed from the full coproduct.
pub fn character_shift(pbw: &PbwAlgebra, phi: &Character, x: &Elem) -> Result<BarElement> {
    pbw.validate(phi)?;
    let alg = pbw.algebra();
    let mut out = SymElem::zero();
    if phi.values.is_empty() {
        return Ok(BarElement { original: x.clone(), shifted: x.to_sym() });
    }
    for (right, left) in coproduct(alg, x).by_right_leg() {
        let v = pbw.evaluate(phi, &left)?;
        if !v.is_zero() {
            out.add_term(right, v);
        }
    }
    Ok(BarElement { original: x.clone(), shifted: out })
}

/// Closed form `X_bar = sum_{0 <= alpha_bar <= mu} lam_{alpha_bar} s_{alpha_bar}(x) K_mu^{-1}`
/// for a generator `X = x K_mu^{-1}` of `psi(U^+[w])` and a character
/// supported on pairwise orthogonal simple roots.
pub fn character_shift_closed(pbw: &PbwAlgebra, phi: &Character, x: &Elem) -> Result<BarElement> {
    if pbw.side() != Side::Plus {
        return Err(Error::Precondition("the closed form applies to psi(U+[w])".into()));
    }
    pbw.validate(phi)?;
    let alg = pbw.algebra();
    let rs = alg.root_system();
    let mut simple_supp = Vec::new();
    for (r, v) in &phi.values {
        let i = rs.simple_index(r).ok_or_else(|| Error::Precondition(format!("support root {r} is not simple")))?;
        simple_supp.push((i, v.clone()));
    }
    let mu = pbw.degree_of(x).ok_or_else(|| Error::InvalidArgument("generator is not homogeneous".into()))?;
    let xe = alg.mul(x, &alg.k(&mu));
    if !alg.is_in_u_plus(&xe) {
        return Err(Error::InvalidArgument("generator is not of the form x K_mu^{-1}".into()));
    }
    let kinv = alg.k::<RationalFunction>(&mu.neg());
    let mut out = x.to_sym();
    // multi-indices over the support, bounded by mu
    let mut stack: Vec<(usize, Root, SymbolicScalar)> = vec![(0, rs.zero_root(), SymbolicScalar::one())];
    while let Some((k, ab, lam)) = stack.pop() {
        if k == simple_supp.len() {
            if ab.is_zero() {
                continue;
            }
            let s = s_bar(alg, &ab, &xe)?;
            if !s.is_zero() {
                out = out.add(&alg.mul(&s, &kinv).to_sym().scale_by(&lam));
            }
            continue;
        }
        let (i, v) = &simple_supp[k];
        let mut cur = ab.clone();
        let mut l = lam.clone();
        loop {
            stack.push((k + 1, cur.clone(), l.clone()));
            cur = cur.add(&rs.simple(*i));
            l = l.mul(v);
            if cur.0[*i] > mu.0[*i] {
                break;
            }
        }
    }
    Ok(BarElement { original: x.clone(), shifted: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::parse_word;

    fn lam(j: usize) -> SymbolicScalar {
        SymbolicScalar::lam(j)
    }

    #[test]
    fn sl2_shifts() {
        let a = UqAlgebra::sl(2).unwrap();
        let w = parse_word(1, "s1").unwrap();
        let alpha = Root(vec![1]);
        let minus = PbwAlgebra::new(&a, Side::Minus, &w).unwrap();
        let phi = Character::new([(alpha.clone(), lam(2))]);
        let fbar = character_shift(&minus, &phi, &a.f(0)).unwrap();
        assert_eq!(fbar.shifted, a.parse_sym("F1 + lam2 K1^-1").unwrap());
        let plus = PbwAlgebra::new(&a, Side::Plus, &w).unwrap();
        let phi = Character::new([(alpha, lam(1))]);
        let x = plus.generators()[0].clone();
        let ebar = character_shift(&plus, &phi, &x).unwrap();
        assert_eq!(ebar.shifted, a.parse_sym("E1 K1^-1 + lam1 K1^-1").unwrap());
        assert_eq!(character_shift_closed(&plus, &phi, &x).unwrap(), ebar);
        let triv = character_shift(&plus, &Character::trivial(), &x).unwrap();
        assert_eq!(triv.shifted, x.to_sym());
    }

    #[test]
    fn sl3_e_alpha_beta() {
        let a = UqAlgebra::sl(3).unwrap();
        let w = parse_word(2, "s1 s2 s1").unwrap();
        let plus = PbwAlgebra::new(&a, Side::Plus, &w).unwrap();
        let phi = Character::new([(Root(vec![1, 0]), lam(1))]);
        let x = plus.generators()[1].clone();
        let bar = character_shift(&plus, &phi, &x).unwrap();
        let expected = a
            .parse_sym("E1 E2 K[-a1-a2] - (q^-1) E2 E1 K[-a1-a2] + (1 - q^-2)*lam1 E2 K[-a1-a2]")
            .unwrap();
        assert_eq!(bar.shifted, expected);
        assert_eq!(character_shift_closed(&plus, &phi, &x).unwrap(), bar);
    }

    #[test]
    fn sl3_f_beta_alpha() {
        let a = UqAlgebra::sl(3).unwrap();
        let w = parse_word(2, "s1 s2").unwrap();
        let minus = PbwAlgebra::new(&a, Side::Minus, &w).unwrap();
        let phi = Character::new([(Root(vec![1, 0]), lam(2))]);
        let y = minus.generators()[1].clone();
        let bar = character_shift(&minus, &phi, &y).unwrap();
        let expected = y.to_sym().add(&a.parse_sym("(q^-1 - q)*lam2 F2 K1^-1").unwrap());
        assert_eq!(bar.shifted, expected);
    }

    #[test]
    fn invalid_support_rejected() {
        let a = UqAlgebra::sl(3).unwrap();
        let w = parse_word(2, "s1 s2 s1").unwrap();
        let plus = PbwAlgebra::new(&a, Side::Plus, &w).unwrap();
        // alpha1 and alpha1+alpha2 are not orthogonal
        let phi = Character::new([(Root(vec![1, 0]), lam(1)), (Root(vec![1, 1]), lam(2))]);
        assert!(character_shift(&plus, &phi, &plus.generators()[0]).is_err());
        let phi = Character::new([(Root(vec![1, 1]), lam(1))]);
        assert!(matches!(character_shift(&plus, &phi, &plus.generators()[0]), Err(Error::InvalidCharacter(_))));
    }

    #[test]
    fn character_literal() {
        let a = UqAlgebra::sl(4).unwrap();
        let phi = parse_character(&a, "phi{a1: lam, a3: (q^2)/(1 - q^2)}.").unwrap();
        assert_eq!(phi.values.len(), 2);
        assert_eq!(phi.value(&Root(vec![1, 0, 0])), lam(1));
        assert!(parse_character(&a, "phi{a5: 1}").is_err());
        assert_eq!(parse_character(&a, &phi.to_string()).unwrap(), phi);
    }
}
