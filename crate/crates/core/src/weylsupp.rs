//! Supplementing two Weyl group elements with an orthogonal intersection
//! of inversion sets, and exhaustive verifiers over small Weyl groups.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, WeylElement, WeylGroup, WeylWord};

/// Default bound on the group order for the exhaustive verifiers.
pub const MAX_GROUP_ORDER: usize = 1200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupplementResult {
    pub w1_prime: WeylWord,
    pub w2_prime: WeylWord,
    pub b: BTreeSet<Root>,
    /// Reduced word of `w1_prime` whose last `|B|` inversion roots are `B`.
    pub tail_word: WeylWord,
}

fn check_orthogonal(rs: &RootSystem, b: &BTreeSet<Root>) -> Result<()> {
    for x in b {
        for y in b {
            if x < y && rs.pairing(x, y) != 0 {
                return Err(Error::NotOrthogonal(x.to_string(), y.to_string()));
            }
        }
    }
    Ok(())
}

fn intersection(rs: &RootSystem, a: &WeylElement, b: &WeylElement) -> BTreeSet<Root> {
    let x = rs.inversion_set_of(a);
    let y = rs.inversion_set_of(b);
    x.intersection(&y).cloned().collect()
}

/// Enlarge `w1`, `w2` to `w1'`, `w2'` with
/// `Phi+(w1') ∩ Phi+(w2') = B` and `Phi+(w1') ∪ Phi+(w2') = Phi+`.
pub fn supplement(rs: &RootSystem, w1: &WeylWord, w2: &WeylWord) -> Result<SupplementResult> {
    let n = rs.rank();
    let e1 = rs.element(w1);
    let e2 = rs.element(w2);
    let b = intersection(rs, &e1, &e2);
    if b.is_empty() {
        return Err(Error::Precondition("the intersection B is empty".into()));
    }
    check_orthogonal(rs, &b)?;

    // conjugate B into the simple roots
    let (mut v1, mut v2, mut bb) = (e1.clone(), e2.clone(), b.clone());
    let mut prefix = Vec::new();
    while !bb.iter().all(|r| rs.simple_index(r).is_some()) {
        let inv1 = rs.inversion_set_of(&v1);
        let pick = (0..n).find(|&i| {
            let a = rs.simple(i);
            inv1.contains(&a) && !bb.contains(&a)
        });
        let Some(i) = pick else {
            return Err(Error::Internal(format!(
                "no simple root of Phi+(w1) outside B for w1 = {w1}, w2 = {w2}"
            )));
        };
        let s = rs.simple_reflection(i);
        v1 = s.mul(&v1);
        v2 = s.mul(&v2);
        bb = bb.iter().map(|r| rs.reflect(i, r)).collect();
        prefix.push(i);
    }

    let w0 = rs.element(&rs.longest_element());
    let total = rs.num_positive();
    loop {
        let i1 = rs.inversion_set_of(&v1);
        let i2 = rs.inversion_set_of(&v2);
        if i1.union(&i2).count() == total {
            break;
        }
        let v2inv = rs.inverse(&v2);
        let grow = (0..n).find(|&g| {
            let x = v1.apply(&rs.simple(g));
            x.is_positive() && v2inv.apply(&x).is_positive()
        });
        if let Some(g) = grow {
            v1 = v1.mul(&rs.simple_reflection(g));
            continue;
        }
        let tail: Vec<usize> = (0..n)
            .filter(|&g| {
                let x = v1.apply(&rs.simple(g));
                x.is_negative() && bb.contains(&x.neg())
            })
            .collect();
        if tail.len() != bb.len() {
            return Err(Error::Internal(format!(
                "extension loop exhausted its candidates for w1 = {w1}, w2 = {w2}"
            )));
        }
        let mut z = v1.clone();
        for &g in &tail {
            z = z.mul(&rs.simple_reflection(g));
        }
        v2 = z.mul(&w0);
        break;
    }

    let p = rs.element(&WeylWord(prefix));
    let f1 = p.mul(&v1);
    let f2 = p.mul(&v2);
    let res = SupplementResult {
        w1_prime: rs.reduced_word_of(&f1),
        w2_prime: rs.reduced_word_of(&f2),
        b: b.clone(),
        tail_word: WeylWord::identity(),
    };
    check_postconditions(rs, &e1, &e2, &res).map_err(|m| Error::Internal(format!("{m} for w1 = {w1}, w2 = {w2}")))?;
    let tail_word = b_tail_word(rs, &res)?;
    Ok(SupplementResult { tail_word, ..res })
}

fn check_postconditions(
    rs: &RootSystem,
    e1: &WeylElement,
    e2: &WeylElement,
    r: &SupplementResult,
) -> std::result::Result<(), String> {
    let f1 = rs.element(&r.w1_prime);
    let f2 = rs.element(&r.w2_prime);
    let (a1, a2) = (rs.inversion_set_of(e1), rs.inversion_set_of(e2));
    let (b1, b2) = (rs.inversion_set_of(&f1), rs.inversion_set_of(&f2));
    if !a1.is_subset(&b1) {
        return Err("Phi+(w1) is not contained in Phi+(w1')".into());
    }
    if !a2.is_subset(&b2) {
        return Err("Phi+(w2) is not contained in Phi+(w2')".into());
    }
    if b1.intersection(&b2).cloned().collect::<BTreeSet<_>>() != r.b {
        return Err("intersection differs from B".into());
    }
    if b1.union(&b2).count() != rs.num_positive() {
        return Err("union is not all of Phi+".into());
    }
    if r.w1_prime.len() + r.w2_prime.len() != rs.num_positive() + r.b.len() {
        return Err("length sum differs from |Phi+| + |B|".into());
    }
    Ok(())
}

/// A reduced word of `w1'` ending in the roots of `B`, built from the
/// factorization `w1' = (w2' w0) x`.
pub fn b_tail_word(rs: &RootSystem, r: &SupplementResult) -> Result<WeylWord> {
    let f1 = rs.element(&r.w1_prime);
    let f2 = rs.element(&r.w2_prime);
    let w0 = rs.element(&rs.longest_element());
    let wbar = f2.mul(&w0);
    let x = rs.inverse(&wbar).mul(&f1);
    let (lw, lx) = (rs.length(&wbar), rs.length(&x));
    if lw + lx != r.w1_prime.len() || lx != r.b.len() {
        return Err(Error::Precondition(format!(
            "factorization w1' = (w2' w0) x is not length additive ({lw} + {lx} vs {})",
            r.w1_prime.len()
        )));
    }
    let word = rs.reduced_word_of(&wbar).concat(&rs.reduced_word_of(&x));
    let betas = rs.inversion_set(&word)?;
    let tail: BTreeSet<Root> = betas[betas.len() - r.b.len()..].iter().cloned().collect();
    if tail != r.b {
        return Err(Error::Mismatch(format!("tail of {word} is not B")));
    }
    Ok(word)
}

/// Verdict of the exhaustive checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub root_system: String,
    pub rank: usize,
    pub group_order: usize,
    pub pairs_checked: usize,
    pub counterexamples: usize,
    /// The first few failing pairs as `(w1, w2, reason)`.
    pub examples: Vec<(String, String, String)>,
    pub wall_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counterexamples == 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} counterexamples / {} pairs (|W| = {}, {} ms)",
            self.root_system, self.counterexamples, self.pairs_checked, self.group_order, self.wall_ms
        )
    }
}

struct PairContext {
    orth: Vec<u64>,
    simple_mask: u64,
}

impl PairContext {
    fn new(rs: &RootSystem) -> Self {
        let roots = rs.positive_roots();
        let orth = roots
            .iter()
            .map(|a| {
                roots.iter().enumerate().filter(|(_, b)| rs.pairing(a, b) == 0).fold(0u64, |m, (k, _)| m | (1 << k))
            })
            .collect();
        let simple_mask = (0..rs.rank()).fold(0u64, |m, i| m | (1 << rs.root_index(&rs.simple(i)).unwrap()));
        PairContext { orth, simple_mask }
    }

    fn pairwise_orthogonal(&self, b: u64) -> bool {
        let mut rest = b;
        while rest != 0 {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (b & !(1u64 << k)) & !self.orth[k] != 0 {
                return false;
            }
        }
        true
    }
}

fn run_pairs<F>(rs: &RootSystem, max_order: usize, check: F) -> Result<VerifyReport>
where
    F: Fn(&WeylGroup, usize, usize, u64) -> Option<String> + Sync,
{
    let start = Instant::now();
    let g = WeylGroup::enumerate(rs, max_order)?;
    let ctx = PairContext::new(rs);
    let per_row: Vec<(usize, Vec<(String, String, String)>, usize)> = (0..g.len())
        .into_par_iter()
        .map(|i| {
            let mut checked = 0;
            let mut bad = Vec::new();
            let mut nbad = 0;
            for j in 0..g.len() {
                let b = g.get(i).inversions & g.get(j).inversions;
                if b == 0 || !ctx.pairwise_orthogonal(b) {
                    continue;
                }
                checked += 1;
                if let Some(reason) = check(&g, i, j, b) {
                    nbad += 1;
                    if bad.len() < 5 {
                        bad.push((g.get(i).word.to_string(), g.get(j).word.to_string(), reason));
                    }
                }
            }
            (checked, bad, nbad)
        })
        .collect();
    let mut report = VerifyReport {
        root_system: rs.label(),
        rank: rs.rank(),
        group_order: g.len(),
        pairs_checked: 0,
        counterexamples: 0,
        examples: Vec::new(),
        wall_ms: 0,
    };
    for (c, bad, nbad) in per_row {
        report.pairs_checked += c;
        report.counterexamples += nbad;
        for e in bad {
            if report.examples.len() < 5 {
                report.examples.push(e);
            }
        }
    }
    report.wall_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Checks, for all ordered pairs with nonempty pairwise orthogonal `B`,
/// that `Phi+(w1)` has a simple root outside `B` or exactly `|B|` simple
/// roots.
pub fn verify_kinb(rs: &RootSystem) -> Result<VerifyReport> {
    verify_kinb_bounded(rs, MAX_GROUP_ORDER)
}

pub fn verify_kinb_bounded(rs: &RootSystem, max_order: usize) -> Result<VerifyReport> {
    let ctx = PairContext::new(rs);
    run_pairs(rs, max_order, |g, i, _j, b| {
        let simple_in_w1 = g.get(i).inversions & ctx.simple_mask;
        if simple_in_w1 & !b != 0 || simple_in_w1.count_ones() == b.count_ones() {
            None
        } else {
            Some("no simple root outside B and |Pi ∩ Phi+(w1)| != |B|".into())
        }
    })
}

/// Runs the supplement algorithm and the tail-word construction on every
/// valid ordered pair and checks all postconditions.
pub fn verify_supplement_exhaustive(rs: &RootSystem) -> Result<VerifyReport> {
    verify_supplement_bounded(rs, MAX_GROUP_ORDER)
}

pub fn verify_supplement_bounded(rs: &RootSystem, max_order: usize) -> Result<VerifyReport> {
    run_pairs(rs, max_order, |g, i, j, _b| match supplement(rs, &g.get(i).word, &g.get(j).word) {
        Ok(_) => None,
        Err(e) => Some(e.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{parse_word, CartanType};

    fn w(rs: &RootSystem, s: &str) -> WeylWord {
        parse_word(rs.rank(), s).unwrap()
    }

    #[test]
    fn a1_is_already_covering() {
        let rs = RootSystem::a(1);
        let r = supplement(&rs, &w(&rs, "s1"), &w(&rs, "s1")).unwrap();
        assert_eq!(r.w1_prime, w(&rs, "s1"));
        assert_eq!(r.w2_prime, w(&rs, "s1"));
        assert_eq!(r.tail_word, w(&rs, "s1"));
    }

    #[test]
    fn a2_equal_simple_reflections() {
        let rs = RootSystem::a(2);
        let r = supplement(&rs, &w(&rs, "s1"), &w(&rs, "s1")).unwrap();
        assert_eq!(rs.inversion_set_of(&rs.element(&r.w1_prime)).len(), 3);
        assert_eq!(rs.element(&r.w2_prime), rs.simple_reflection(0));
        let betas = rs.inversion_set(&r.tail_word).unwrap();
        assert_eq!(betas.last(), Some(&rs.simple(0)));
        assert_eq!(rs.element(&r.tail_word), rs.element(&r.w1_prime));
    }

    #[test]
    fn a3_mixed_lengths() {
        let rs = RootSystem::a(3);
        let r = supplement(&rs, &w(&rs, "s1 s2"), &w(&rs, "s1")).unwrap();
        assert_eq!(r.b, BTreeSet::from([rs.simple(0)]));
        assert_eq!(r.w1_prime.len() + r.w2_prime.len(), 7);
    }

    #[test]
    fn rejects_bad_intersections() {
        let rs = RootSystem::a(2);
        assert!(matches!(supplement(&rs, &w(&rs, "s1"), &w(&rs, "s2")), Err(Error::Precondition(_))));
        let w0 = rs.longest_element();
        assert!(matches!(supplement(&rs, &w0, &w0), Err(Error::NotOrthogonal(_, _))));
    }

    #[test]
    fn supplement_is_idempotent_in_a3() {
        let rs = RootSystem::a(3);
        let g = WeylGroup::enumerate(&rs, 100).unwrap();
        for a in g.entries() {
            for b in g.entries() {
                let Ok(r) = supplement(&rs, &a.word, &b.word) else { continue };
                let again = supplement(&rs, &r.w1_prime, &r.w2_prime).unwrap();
                assert_eq!(rs.element(&again.w1_prime), rs.element(&r.w1_prime));
                assert_eq!(rs.element(&again.w2_prime), rs.element(&r.w2_prime));
            }
        }
    }

    #[test]
    fn small_exhaustive_runs() {
        for (t, n) in [(CartanType::A, 2), (CartanType::G, 2), (CartanType::B, 2)] {
            let rs = RootSystem::new(t, n).unwrap();
            let k = verify_kinb(&rs).unwrap();
            assert!(k.passed(), "{}", k.summary());
            assert!(k.pairs_checked > 0);
        }
        let rs = RootSystem::a(2);
        assert!(verify_supplement_exhaustive(&rs).unwrap().passed());
    }
}
