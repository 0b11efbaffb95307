//! Seeded random generators and invariant checks shared by the test suites
//! and the `selftest` command.

use crate::coeff::RationalFunction;
use crate::rootsys::Root;
use crate::uqalg::{Elem, Mono, UqAlgebra};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn coeff(r: &mut ChaCha8Rng) -> RationalFunction {
    let c = [-2, -1, 1, 1, 2, 3][r.random_range(0..6)];
    RationalFunction::from_int(c).mul_q_pow(r.random_range(-2..=2))
}

/// A random letter multiset of size `len` over `0..rank`.
pub fn letters(r: &mut ChaCha8Rng, rank: usize, len: usize) -> Vec<u8> {
    (0..len).map(|_| r.random_range(0..rank) as u8).collect()
}

/// Random homogeneous element of `U^+`: a combination of permutations of one
/// letter multiset.
pub fn homogeneous_plus(alg: &UqAlgebra, r: &mut ChaCha8Rng, len: usize) -> Elem {
    let base = letters(r, alg.rank(), len);
    let mut x = Elem::zero();
    for _ in 0..r.random_range(1..=3) {
        let mut w = base.clone();
        w.shuffle(r);
        x = x.add(&alg.e_word::<RationalFunction>(&w).scale(&coeff(r)));
    }
    x
}

pub fn homogeneous_minus(alg: &UqAlgebra, r: &mut ChaCha8Rng, len: usize) -> Elem {
    alg.sigma(&homogeneous_plus(alg, r, len))
}

/// Random element with monomials `F^a K^b E^c` of total letter count `<= len`.
pub fn mixed(alg: &UqAlgebra, r: &mut ChaCha8Rng, len: usize) -> Elem {
    let rank = alg.rank();
    let mut x = Elem::zero();
    for _ in 0..r.random_range(1..=3) {
        let nf = r.random_range(0..=len);
        let ne = r.random_range(0..=len - nf);
        let f = letters(r, rank, nf);
        let e = letters(r, rank, ne);
        let k = Root((0..rank).map(|_| r.random_range(-1..=1)).collect());
        let m = alg.product(&[
            &alg.f_word::<RationalFunction>(&f),
            &Elem::from_mono(Mono { f: vec![], k, e: vec![] }, RationalFunction::one()),
            &alg.e_word(&e),
        ]);
        x = x.add(&m.scale(&coeff(r)));
    }
    x
}

pub mod checks {
    use super::*;
    use crate::coeff::q_diff;
    use crate::coideal::{r_alpha, r_alpha_minus, RSide};
    use crate::uqalg::rep_eval;

    fn algebras() -> Vec<UqAlgebra> {
        (2..=4).map(|n| UqAlgebra::sl(n).unwrap()).collect()
    }

    fn r(a: &UqAlgebra, i: usize, x: &Elem) -> Elem {
        r_alpha(a, i, x, RSide::R).unwrap()
    }

    fn rp(a: &UqAlgebra, i: usize, x: &Elem) -> Elem {
        r_alpha(a, i, x, RSide::RPrime).unwrap()
    }

    /// Failing instances of `r(xy) = x r(y) + q^{(a,|y|)} r(x) y` and
    /// `r'(xy) = r'(x) y + q^{(|x|,a)} x r'(y)`.
    pub fn product_rules(instances: usize, seed: u64) -> Vec<usize> {
        let algs = algebras();
        let mut g = rng(seed);
        let mut bad = Vec::new();
        for k in 0..instances {
            let a = &algs[k % 3];
            let rs = a.root_system();
            let (lx, ly) = (g.random_range(0..=2), g.random_range(0..=2));
            let x = homogeneous_plus(a, &mut g, lx);
            let y = homogeneous_plus(a, &mut g, ly);
            let wt = |z: &Elem| a.weight(z).unwrap_or_else(|| rs.zero_root());
            let (mx, my) = (wt(&x), wt(&y));
            let i = g.random_range(0..a.rank());
            let ai = rs.simple(i);
            let xy = a.mul(&x, &y);
            let r_ok = r(a, i, &xy)
                == a.mul(&x, &r(a, i, &y)).add(&a.mul(&r(a, i, &x), &y).scale(&RationalFunction::q_pow(rs.pairing(&ai, &my))));
            let rp_ok = rp(a, i, &xy)
                == a.mul(&rp(a, i, &x), &y).add(&a.mul(&x, &rp(a, i, &y)).scale(&RationalFunction::q_pow(rs.pairing(&mx, &ai))));
            if !(r_ok && rp_ok) {
                bad.push(k);
            }
        }
        bad
    }

    /// `r r' = r' r` always; `r r`, `r' r'` commute for equal or orthogonal roots.
    pub fn commutations(instances: usize, seed: u64) -> Vec<usize> {
        let algs = algebras();
        let mut g = rng(seed);
        let mut bad = Vec::new();
        for k in 0..instances {
            let a = &algs[k % 3];
            let rs = a.root_system();
            let len = g.random_range(2..=4);
            let x = homogeneous_plus(a, &mut g, len);
            let i = g.random_range(0..a.rank());
            let j = g.random_range(0..a.rank());
            let mut ok = r(a, i, &rp(a, j, &x)) == rp(a, j, &r(a, i, &x));
            if i == j || rs.pairing(&rs.simple(i), &rs.simple(j)) == 0 {
                ok &= r(a, i, &r(a, j, &x)) == r(a, j, &r(a, i, &x));
                ok &= rp(a, i, &rp(a, j, &x)) == rp(a, j, &rp(a, i, &x));
            }
            if !ok {
                bad.push(k);
            }
        }
        bad
    }

    /// `E_a y - y E_a = (q - q^{-1})^{-1} (K_a r_a(y) - r'_a(y) K_a^{-1})` for `y` in `U^-`.
    pub fn e_commutator(instances: usize, seed: u64) -> Vec<usize> {
        let algs = algebras();
        let mut g = rng(seed);
        let mut bad = Vec::new();
        for k in 0..instances {
            let a = &algs[k % 3];
            let len = g.random_range(0..=3);
            let y = homogeneous_minus(a, &mut g, len);
            let i = g.random_range(0..a.rank());
            let e: Elem = a.e(i);
            let lhs = a.mul(&e, &y).sub(&a.mul(&y, &e));
            let ki = a.k(&a.root_system().simple(i));
            let kinv = a.k(&a.root_system().simple(i).neg());
            let rhs = a
                .mul(&ki, &r_alpha_minus(a, i, &y, RSide::R).unwrap())
                .sub(&a.mul(&r_alpha_minus(a, i, &y, RSide::RPrime).unwrap(), &kinv))
                .scale(&q_diff(1).inv().unwrap());
            if lhs != rhs {
                bad.push(k);
            }
        }
        bad
    }

    /// Along a random reduced word of `w0` with `beta_j = a`: `r'_a(E_{beta_i}) = 0`
    /// for `i < j` and `r_a(E_{beta_i}) = 0` for `i > j`.
    pub fn zero_patterns(instances: usize, seed: u64) -> Vec<usize> {
        let algs = algebras();
        let mut g = rng(seed);
        let mut bad = Vec::new();
        for k in 0..instances {
            let a = &algs[k % 3];
            let rs = a.root_system();
            let mut word = Vec::new();
            let mut cur = rs.element(&rs.longest_element());
            while rs.length(&cur) > 0 {
                let descents: Vec<usize> =
                    (0..a.rank()).filter(|&i| rs.length(&rs.simple_reflection(i).mul(&cur)) < rs.length(&cur)).collect();
                let i = descents[g.random_range(0..descents.len())];
                word.push(i);
                cur = rs.simple_reflection(i).mul(&cur);
            }
            let vecs = a.root_vectors_e(&word).unwrap();
            let mut ok = true;
            for alpha in 0..a.rank() {
                let j = vecs.iter().position(|(b, _)| *b == rs.simple(alpha)).unwrap();
                for (p, (_, x)) in vecs.iter().enumerate() {
                    ok &= !(p < j && !rp(a, alpha, x).is_zero());
                    ok &= !(p > j && !r(a, alpha, x).is_zero());
                }
            }
            if !ok {
                bad.push(k);
            }
        }
        bad
    }

    /// `r'_a = tau r_a tau` on `U^+`.
    pub fn tau_conjugation(instances: usize, seed: u64) -> Vec<usize> {
        let algs = algebras();
        let mut g = rng(seed);
        let mut bad = Vec::new();
        for k in 0..instances {
            let a = &algs[k % 3];
            let len = g.random_range(0..=4);
            let x = homogeneous_plus(a, &mut g, len);
            let i = g.random_range(0..a.rank());
            if rp(a, i, &x) != a.tau(&r(a, i, &a.tau(&x))) {
                bad.push(k);
            }
        }
        bad
    }

    /// Triples `(x y) z != x (y z)` for `U_q(sl_{rank+1})`.
    pub fn associativity(rank: usize, triples: usize, seed: u64) -> Vec<usize> {
        let a = UqAlgebra::sl(rank + 1).unwrap();
        let mut g = rng(seed);
        (0..triples)
            .filter(|_| {
                let x = mixed(&a, &mut g, 2);
                let y = mixed(&a, &mut g, 2);
                let z = mixed(&a, &mut g, 2);
                a.mul(&a.mul(&x, &y), &z) != a.mul(&x, &a.mul(&y, &z))
            })
            .collect()
    }

    fn rep_equal(a: &UqAlgebra, x: &Elem, y: &Elem) -> bool {
        let d = x.sub(y);
        (1..=4).all(|deg| rep_eval(a, &d, deg).unwrap().is_zero())
    }

    /// Pairs where normal forms and `V^{(x)d}`, `d <= 4`, disagree on `sl_3`,
    /// with the counts of equal and unequal pairs.
    pub fn oracle(pairs: usize, seed: u64) -> (Vec<usize>, usize, usize) {
        let a = UqAlgebra::sl(3).unwrap();
        let mut g = rng(seed);
        let (mut bad, mut equal, mut unequal) = (Vec::new(), 0, 0);
        for k in 0..pairs {
            let x = mixed(&a, &mut g, 2);
            let y = mixed(&a, &mut g, 2);
            let (lhs, rhs) = if g.random_bool(0.5) {
                let z = mixed(&a, &mut g, 1);
                (a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)))
            } else {
                (a.mul(&x, &y), a.mul(&y, &x))
            };
            let nf = lhs == rhs;
            if nf != rep_equal(&a, &lhs, &rhs) {
                bad.push(k);
            }
            if nf {
                equal += 1;
            } else {
                unequal += 1;
            }
        }
        (bad, equal, unequal)
    }
}

/// Outcome of one invariant suite.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub detail: String,
    pub wall_ms: u128,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

type Suite = (&'static str, fn(usize, u64) -> (usize, usize, String));

fn count(cases: usize, bad: Vec<usize>) -> (usize, usize, String) {
    let detail = if bad.is_empty() { String::new() } else { format!("failing instances {bad:?}") };
    (cases, bad.len(), detail)
}

fn suite_words(instances: usize, seed: u64) -> (usize, usize, String) {
    use crate::rootsys::{CartanType, RootSystem, WeylWord};
    let systems = [
        RootSystem::a(3),
        RootSystem::new(CartanType::B, 3).unwrap(),
        RootSystem::new(CartanType::C, 3).unwrap(),
        RootSystem::new(CartanType::G, 2).unwrap(),
    ];
    let mut g = rng(seed);
    let mut bad = Vec::new();
    for k in 0..instances {
        let rs = &systems[k % systems.len()];
        let len = g.random_range(0..12);
        let w = WeylWord((0..len).map(|_| g.random_range(0..rs.rank())).collect());
        let r = rs.reduce_word(&w);
        let mut ok = rs.is_reduced(&r) && rs.element(&r) == rs.element(&w) && r.len() % 2 == w.len() % 2;
        ok &= rs.inversion_set(&r).map(|s| s.len() == r.len()).unwrap_or(false);
        if !ok {
            bad.push(k);
        }
    }
    count(instances, bad)
}

fn suite_weyl_supplement(_: usize, _: u64) -> (usize, usize, String) {
    use crate::rootsys::RootSystem;
    use crate::weylsupp::verify_supplement_exhaustive;
    let (mut cases, mut bad, mut notes) = (0, 0, Vec::new());
    for n in 2..=3 {
        let r = verify_supplement_exhaustive(&RootSystem::a(n)).unwrap();
        cases += r.pairs_checked;
        bad += r.counterexamples;
        notes.extend(r.examples.iter().map(|e| format!("{e:?}")));
    }
    (cases, bad, notes.join("; "))
}

fn suite_kinb(_: usize, _: u64) -> (usize, usize, String) {
    use crate::rootsys::{CartanType, RootSystem};
    use crate::weylsupp::verify_kinb;
    let systems = [RootSystem::a(2), RootSystem::a(3), RootSystem::new(CartanType::B, 2).unwrap(), RootSystem::new(CartanType::G, 2).unwrap()];
    let (mut cases, mut bad) = (0, 0);
    for rs in &systems {
        let r = verify_kinb(rs).unwrap();
        cases += r.pairs_checked;
        bad += r.counterexamples;
    }
    (cases, bad, String::new())
}

fn suite_commutator_vanishing(_: usize, _: u64) -> (usize, usize, String) {
    use crate::borel::nondegenerate_borel;
    use crate::coeff::{Scalar, SymbolicScalar};
    let (mut cases, mut bad) = (0, Vec::new());
    for n in 2..=3 {
        let a = UqAlgebra::sl(n).unwrap();
        let rs = a.root_system();
        for i in 0..a.rank() {
            let rcs = nondegenerate_borel(&a, &[i]).unwrap();
            let alpha = rs.simple(i);
            let f = rcs.f_gen(&alpha).unwrap().shifted();
            for x in rcs.e_gens.iter().filter(|x| x.root != alpha) {
                cases += 1;
                let c = a.q_commutator(f, x.shifted(), &SymbolicScalar::q_pow(-rs.pairing(&x.root, &alpha)));
                if !c.is_zero() {
                    bad.push(format!("sl{n} F{} {}", i + 1, x.label));
                }
            }
        }
    }
    (cases, bad.len(), bad.join(", "))
}

fn suite_families(_: usize, _: u64) -> (usize, usize, String) {
    use crate::borel::{build_rcs, ede_battery, orthogonal_lattice, paired_characters, reference_families};
    use crate::rootsys::{parse_root, parse_word};
    use std::collections::BTreeSet;
    let (mut cases, mut bad) = (0, Vec::new());
    for n in 2..=4 {
        let a = UqAlgebra::sl(n).unwrap();
        let rs = a.root_system();
        for (name, wp, wm, supp) in reference_families(n) {
            cases += 1;
            let s: BTreeSet<Root> = supp.iter().map(|r| parse_root(rs, r).unwrap()).collect();
            let (p, m) = paired_characters(&a, &s).unwrap();
            let wp = parse_word(n - 1, wp).unwrap();
            let wm = parse_word(n - 1, wm).unwrap();
            let rcs = build_rcs(&a, &wp, &wm, &p, &m, &orthogonal_lattice(&a, &s)).unwrap();
            if !ede_battery(&a, &rcs).unwrap().passed() {
                bad.push(format!("sl{n} {name}"));
            }
        }
    }
    (cases, bad.len(), bad.join(", "))
}

fn suite_hilbert(_: usize, _: u64) -> (usize, usize, String) {
    use crate::borel::{induced_hilbert, induced_hilbert_brute, nondegenerate_borel};
    let (mut cases, mut bad) = (0, Vec::new());
    for (n, supps) in [(2, vec![vec![], vec![0]]), (3, vec![vec![], vec![0], vec![1]]), (4, vec![vec![0], vec![0, 2]])] {
        let a = UqAlgebra::sl(n).unwrap();
        for c in supps {
            cases += 1;
            let rcs = nondegenerate_borel(&a, &c).unwrap();
            if induced_hilbert(&a, &rcs, 6).unwrap() != induced_hilbert_brute(&a, &rcs, 6).unwrap() {
                bad.push(format!("sl{n} {c:?}"));
            }
        }
    }
    (cases, bad.len(), bad.join(", "))
}

fn suite_palm_chains(_: usize, _: u64) -> (usize, usize, String) {
    use crate::borel::degenerate_palm_rcs;
    let (mut cases, mut bad) = (0, Vec::new());
    for n in 3..=4 {
        let a = UqAlgebra::sl(n).unwrap();
        for i in 1..n {
            for l in 0..=n - 1 - i {
                for k in 0..i {
                    cases += 1;
                    let (_, v) = degenerate_palm_rcs(&a, i, l, k).unwrap();
                    let ok = v.chain_steps <= l.max(k) + 1
                        && v.relations.iter().all(|r| if r.family == "chain" { r.actual_factor.as_deref() == Some("-q") } else { r.holds });
                    if !ok {
                        bad.push(format!("sl{n} ({i},{l},{k})"));
                    }
                }
            }
        }
    }
    (cases, bad.len(), bad.join(", "))
}

const SUITES: &[Suite] = &[
    ("reduced words", suite_words),
    ("r-map product rules", |n, s| count(n, checks::product_rules(n, s))),
    ("r-map commutations", |n, s| count(n, checks::commutations(n, s))),
    ("E-commutator on U-", |n, s| count(n, checks::e_commutator(n, s))),
    ("r-map zero patterns", |n, s| count(n, checks::zero_patterns(n, s))),
    ("tau conjugation", |n, s| count(n, checks::tau_conjugation(n, s))),
    ("associativity", |n, s| {
        let bad: Vec<usize> = (1..=3).flat_map(|r| checks::associativity(r, n, s + r as u64)).collect();
        count(3 * n, bad)
    }),
    ("representation oracle", |n, s| {
        let (bad, eq, ne) = checks::oracle(n / 2, s);
        let (c, f, _) = count(n / 2, bad);
        (c, f, format!("{eq} equal, {ne} unequal"))
    }),
    ("Weyl supplement", suite_weyl_supplement),
    ("simple roots in B", suite_kinb),
    ("commutator vanishing", suite_commutator_vanishing),
    ("listed families", suite_families),
    ("Hilbert series", suite_hilbert),
    ("palm chains", suite_palm_chains),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).collect()
}

/// Runs every suite with `instances` random cases per randomized suite.
/// Suite `k` draws from the seed `seed + k`, so results do not depend on
/// scheduling.
pub fn run_all(instances: usize, seed: u64) -> Vec<SuiteResult> {
    use rayon::prelude::*;
    SUITES
        .par_iter()
        .enumerate()
        .map(|(k, (name, f))| {
            let start = std::time::Instant::now();
            let (cases, failures, detail) = f(instances, seed.wrapping_add(k as u64));
            SuiteResult { name, cases, failures, detail, wall_ms: start.elapsed().as_millis() }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let a = run_all(6, 3);
        assert!(a.iter().all(|r| r.passed()), "{a:?}");
        let b = run_all(6, 3);
        let strip = |v: &[SuiteResult]| v.iter().map(|r| (r.name, r.cases, r.failures, r.detail.clone())).collect::<Vec<_>>();
        assert_eq!(strip(&a), strip(&b));
    }
}
