//! Necessary conditions for a triangular RCS to have only one-dimensional
//! irreducible finite-dimensional representations.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::minuscule::minuscule_commutator_probe;
use super::{weyl_constant, TriangularRcs};
use crate::coeff::{RationalFunction, Scalar, SymbolicScalar};
use crate::error::Result;
use crate::rootsys::{CartanType, Root, RootSystem, WeylElement};
use crate::uqalg::{Mono, UqAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Inapplicable => "n/a",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub verdict: Verdict,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdeReport {
    pub checks: Vec<Check>,
}

impl EdeReport {
    /// No check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail).collect()
    }

    pub fn verdict(&self, name: &str) -> Option<Verdict> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.verdict)
    }
}

impl fmt::Display for EdeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{:<26} {:<5} {}", c.name, c.verdict, c.witness)?;
        }
        Ok(())
    }
}

pub const CHECK_NAMES: [&str; 9] = [
    "k-inverse",
    "sl2-subalgebra",
    "simple-intersection",
    "weyl-pair",
    "simple-support-product",
    "deletion-length",
    "minuscule-commutator",
    "support-product",
    "shift-degrees",
];

fn check(name: &'static str, verdict: Verdict, witness: impl Into<String>) -> Check {
    Check { name, verdict, witness: witness.into() }
}

/// `prod_{b in S} s_b`, for pairwise orthogonal `S`.
pub(crate) fn reflection_product(rs: &RootSystem, s: &BTreeSet<Root>) -> WeylElement {
    s.iter().fold(WeylElement::identity(rs.rank()), |acc, b| rs.reflection_in(b).mul(&acc))
}

/// `nu < mu` in the root poset.
fn strictly_under(nu: &Root, mu: &Root) -> bool {
    nu != mu && nu.weakly_below(mu)
}

/// Runs every check; a single failure marks the candidate as not ede.
pub fn ede_battery(alg: &UqAlgebra, rcs: &TriangularRcs) -> Result<EdeReport> {
    let rs = alg.root_system();
    let type_a = rs.cartan_type() == CartanType::A;
    let phi_p: BTreeSet<Root> = rs.inversion_set(&rcs.w_plus)?.into_iter().collect();
    let phi_m: BTreeSet<Root> = rs.inversion_set(&rcs.w_minus)?.into_iter().collect();
    let common: BTreeSet<Root> = phi_p.intersection(&phi_m).cloned().collect();
    let sp = rcs.phi_plus.support();
    let sm = rcs.phi_minus.support();
    let both: BTreeSet<Root> = sp.intersection(&sm).cloned().collect();
    let either: BTreeSet<Root> = sp.union(&sm).cloned().collect();
    let simple_common: Vec<&Root> = common.iter().filter(|r| rs.simple_index(r).is_some()).collect();
    let fmt = |r: &Root| rs.format_root(r);
    let mut checks = Vec::new();

    checks.push(check("k-inverse", Verdict::Pass, format!("T_L is a group on {} generator(s)", rcs.l_basis.len())));

    let bare: Vec<&&Root> = simple_common.iter().filter(|r| !sp.contains(**r) && !sm.contains(**r)).collect();
    checks.push(match bare.first() {
        Some(r) => check("sl2-subalgebra", Verdict::Fail, format!("E K^-1 and F for {} both lie in C", fmt(r))),
        None => check("sl2-subalgebra", Verdict::Pass, ""),
    });

    let off: Vec<&&Root> = simple_common.iter().filter(|r| !both.contains(**r)).collect();
    checks.push(match off.first() {
        Some(r) => check("simple-intersection", Verdict::Fail, format!("{} lies in Pi and both inversion sets but not in both supports", fmt(r))),
        None => check("simple-intersection", Verdict::Pass, ""),
    });

    // K^{-2} coefficient of [E_bar, F_bar]_{q^2} for shifted simple pairs
    let shifted: Vec<&&Root> = simple_common.iter().filter(|r| either.contains(**r)).collect();
    if shifted.is_empty() {
        checks.push(check("weyl-pair", Verdict::Inapplicable, "no shifted simple root in both inversion sets"));
    } else {
        let mut bad = None;
        for r in &shifted {
            let (e, f) = (rcs.e_gen(r).expect("generator"), rcs.f_gen(r).expect("generator"));
            let d = rs.pairing(r, r);
            let c = alg.q_commutator(e.shifted(), f.shifted(), &SymbolicScalar::q_pow(d));
            let mono = Mono { f: vec![], k: r.scale(-2), e: vec![] };
            let coeff = c.coeff(&mono);
            if !coeff.is_zero() {
                bad = Some(format!("{}: K^-2 coefficient {}", fmt(r), coeff));
                break;
            }
        }
        checks.push(match bad {
            Some(w) => check("weyl-pair", Verdict::Fail, w),
            None => check("weyl-pair", Verdict::Pass, "every shifted simple pair is a Weyl algebra"),
        });
    }

    let w = weyl_constant(alg, 0)?;
    let product_is_weyl = |r: &Root| -> Result<(bool, SymbolicScalar)> {
        let wc = match rs.simple_index(r) {
            Some(i) => weyl_constant(alg, i)?,
            None => w.clone(),
        };
        let p = rcs.phi_plus.value(r).mul(&rcs.phi_minus.value(r));
        Ok((p.sub(&SymbolicScalar::from_rf(wc)).is_zero(), p))
    };

    let simple_both: Vec<&Root> = both.iter().filter(|r| rs.simple_index(r).is_some()).collect();
    if simple_both.is_empty() {
        checks.push(check("simple-support-product", Verdict::Inapplicable, "no simple root in both supports"));
    } else {
        let mut bad = None;
        for r in &simple_both {
            let (ok, p) = product_is_weyl(r)?;
            if !ok {
                bad = Some(format!("{}: lam lam' = {}", fmt(r), p));
                break;
            }
        }
        checks.push(match bad {
            Some(x) => check("simple-support-product", Verdict::Fail, x),
            None => check("simple-support-product", Verdict::Pass, ""),
        });
    }

    let wp = rs.element(&rcs.w_plus);
    let wprime = reflection_product(rs, &sm).mul(&rs.element(&rcs.w_minus));
    let lhs = rs.length(&rs.inverse(&wprime).mul(&wp));
    let rhs = rs.length(&wprime) + rs.length(&wp);
    let wit = format!("w' = {}, l(w'^-1 w+) = {lhs}, l(w') + l(w+) = {rhs}", rs.reduced_word_of(&wprime));
    checks.push(check("deletion-length", if lhs < rhs { Verdict::Fail } else { Verdict::Pass }, wit));

    if !type_a {
        checks.push(check("minuscule-commutator", Verdict::Inapplicable, "type A only"));
        checks.push(check("support-product", Verdict::Inapplicable, "type A only"));
        checks.push(check("shift-degrees", Verdict::Inapplicable, "type A only"));
        return Ok(EdeReport { checks });
    }

    let ones = vec![RationalFunction::one(); rcs.num_symbols()];
    let middle: Vec<&Root> = common.iter().filter(|m| !either.contains(*m)).collect();
    if middle.is_empty() {
        checks.push(check("minuscule-commutator", Verdict::Inapplicable, "every common root is in a support"));
    } else {
        let mut bad = None;
        for mu in middle {
            if both.iter().any(|nu| strictly_under(nu, mu) && rs.pairing(nu, mu) != 0) {
                continue;
            }
            let e = rcs.e_gen(mu).expect("generator").bar.shifted.substitute(&ones)?;
            let f = rcs.f_gen(mu).expect("generator").bar.shifted.substitute(&ones)?;
            let p = minuscule_commutator_probe(alg, mu, &e, &f)?;
            if p.detects() {
                bad = Some(format!("{}: [E_bar, F_bar]_1 v_{} = ({}) v_{}", p.root, p.vector, p.eigenvalue, p.vector));
                break;
            }
        }
        checks.push(match bad {
            Some(x) => check("minuscule-commutator", Verdict::Fail, x),
            None => check("minuscule-commutator", Verdict::Pass, ""),
        });
    }

    let lonely: Vec<&Root> = both
        .iter()
        .filter(|mu| both.iter().all(|nu| !strictly_under(nu, mu) || rs.pairing(nu, mu) == 0))
        .collect();
    if lonely.is_empty() {
        checks.push(check("support-product", Verdict::Inapplicable, "no support root with orthogonal lower supports"));
    } else {
        let mut bad = None;
        for mu in lonely {
            let (ok, p) = product_is_weyl(mu)?;
            if !ok {
                bad = Some(format!("{}: lam lam' = {}", fmt(mu), p));
                break;
            }
        }
        checks.push(match bad {
            Some(x) => check("support-product", Verdict::Fail, x),
            None => check("support-product", Verdict::Pass, ""),
        });
    }

    if wp != rs.element(&rcs.w_minus) || sp != sm {
        checks.push(check("shift-degrees", Verdict::Inapplicable, "needs w+ = w- and equal supports"));
    } else {
        let mut bad = None;
        for mu in common.iter().filter(|m| rs.simple_index(m).is_none() && !sp.contains(*m)) {
            let e = rcs.e_gen(mu).expect("generator");
            let f = rcs.f_gen(mu).expect("generator");
            let de = shift_degrees(alg, mu, e.shifted().terms().map(|(m, _)| &m.e));
            let df = shift_degrees(alg, mu, f.shifted().terms().map(|(m, _)| &m.f));
            if let (Some(r), Some(s)) = (single_simple(rs, &de), single_simple(rs, &df)) {
                if r != s && sp.contains(&r) && sp.contains(&s) {
                    bad = Some(format!("{}: E shift by {}, F shift by {}", fmt(mu), fmt(&r), fmt(&s)));
                    break;
                }
            }
        }
        checks.push(match bad {
            Some(x) => check("shift-degrees", Verdict::Fail, x),
            None => check("shift-degrees", Verdict::Pass, ""),
        });
    }
    Ok(EdeReport { checks })
}

/// `mu - deg(m)` over the lower-degree monomials of a shifted root vector.
fn shift_degrees<'a>(alg: &UqAlgebra, mu: &Root, words: impl Iterator<Item = &'a Vec<u8>>) -> BTreeSet<Root> {
    let mut out = BTreeSet::new();
    for w in words {
        let mut d = vec![0i64; alg.rank()];
        for &a in w {
            d[a as usize] += 1;
        }
        let d = Root(d);
        if &d != mu {
            out.insert(mu.sub(&d));
        }
    }
    out
}

fn single_simple(rs: &RootSystem, s: &BTreeSet<Root>) -> Option<Root> {
    match s.iter().collect::<Vec<_>>().as_slice() {
        [r] if rs.simple_index(r).is_some() => Some((*r).clone()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::{build_rcs, nondegenerate_borel, paired_characters, reference_table, reference_table_cases};
    use crate::coideal::Character;
    use crate::rootsys::{parse_root, parse_word};

    fn set(alg: &UqAlgebra, roots: &[&str]) -> BTreeSet<Root> {
        roots.iter().map(|r| parse_root(alg.root_system(), r).unwrap()).collect()
    }

    #[test]
    fn reference_tables_pass() {
        for name in reference_table_cases() {
            let t = reference_table(name).unwrap();
            let a = UqAlgebra::sl(t.n).unwrap();
            let r = ede_battery(&a, &t.build(&a).unwrap()).unwrap();
            assert!(r.passed(), "{name}\n{r}");
        }
    }

    #[test]
    fn weyl_algebra_passes_and_perturbation_fails() {
        let a = UqAlgebra::sl(2).unwrap();
        let rcs = nondegenerate_borel(&a, &[0]).unwrap();
        let r = ede_battery(&a, &rcs).unwrap();
        assert!(r.passed(), "{r}");
        let s = set(&a, &["a1"]);
        let plus = Character::new(s.iter().map(|x| (x.clone(), SymbolicScalar::lam(1))));
        let minus = Character::new(s.iter().map(|x| (x.clone(), SymbolicScalar::lam(2))));
        let w = parse_word(1, "s1").unwrap();
        let bad = build_rcs(&a, &w, &w, &plus, &minus, &[]).unwrap();
        let r = ede_battery(&a, &bad).unwrap();
        assert_eq!(r.verdict("weyl-pair"), Some(Verdict::Fail));
        assert_eq!(r.verdict("simple-support-product"), Some(Verdict::Fail));
    }

    #[test]
    fn unsupported_simple_root_fails() {
        let a = UqAlgebra::sl(3).unwrap();
        let w0 = a.root_system().longest_element();
        let s1 = parse_word(2, "s1").unwrap();
        let (p, _) = paired_characters(&a, &set(&a, &["a1"])).unwrap();
        let l = vec![Root(vec![1, 2])];
        let rcs = build_rcs(&a, &w0, &s1, &p, &Character::trivial(), &l).unwrap();
        let r = ede_battery(&a, &rcs).unwrap();
        assert_eq!(r.verdict("simple-intersection"), Some(Verdict::Fail));
    }

    #[test]
    fn middle_root_without_support() {
        let a = UqAlgebra::sl(3).unwrap();
        let rcs = build_rcs(
            &a,
            &parse_word(2, "s1 s2").unwrap(),
            &parse_word(2, "s2 s1").unwrap(),
            &Character::trivial(),
            &Character::trivial(),
            &[],
        )
        .unwrap();
        let r = ede_battery(&a, &rcs).unwrap();
        assert_eq!(r.verdict("minuscule-commutator"), Some(Verdict::Fail), "{r}");
    }

    #[test]
    fn nondegenerate_families_pass() {
        let a = UqAlgebra::sl(4).unwrap();
        for c in [&[][..], &[0], &[1], &[0, 2]] {
            let rcs = nondegenerate_borel(&a, c).unwrap();
            let r = ede_battery(&a, &rcs).unwrap();
            assert!(r.passed(), "{c:?}\n{r}");
        }
    }
}
