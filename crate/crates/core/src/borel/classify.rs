//! Enumeration of triangular Borel candidates for `sl_n`, `n <= 4`, up to
//! reflections `T_i`, the diagram automorphism and the exchange of the two
//! sides by longest-element conjugation.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{build_rcs, ede_battery, orthogonal_lattice, paired_characters, EdeReport, TriangularRcs};
use crate::error::{Error, Result};
use crate::rootsys::{parse_root, parse_word, Root, RootSystem, WeylGroup, WeylWord};
use crate::uqalg::UqAlgebra;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum CandidateKind {
    Standard,
    NonDegenerate,
    Degenerate,
}

impl fmt::Display for CandidateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CandidateKind::Standard => "standard",
            CandidateKind::NonDegenerate => "non-degenerate",
            CandidateKind::Degenerate => "degenerate",
        })
    }
}

/// A triple `(w+, w-, S)` given by group indices and a support bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Triple {
    plus: usize,
    minus: usize,
    supp: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CandidateClass {
    pub label: String,
    pub kind: CandidateKind,
    pub w_plus: WeylWord,
    pub w_minus: WeylWord,
    pub support: Vec<String>,
    /// Number of candidates in the class.
    pub size: usize,
    /// Names of the reference families landing in this class.
    pub families: Vec<String>,
    pub battery: EdeReport,
}

impl CandidateClass {
    /// Passes every implemented necessary condition and contains a listed family.
    pub fn is_confirmed(&self) -> bool {
        self.battery.passed() && !self.families.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub n: usize,
    pub candidates: usize,
    pub classes: Vec<CandidateClass>,
    /// Reference family name with the index of its class, if it is a candidate.
    pub family_classes: Vec<(String, Option<usize>)>,
}

impl Classification {
    pub fn all_families_found(&self) -> bool {
        self.family_classes.iter().all(|(_, c)| c.is_some())
    }

    /// Distinct classes hit by the reference families.
    pub fn family_class_count(&self) -> usize {
        self.family_classes.iter().filter_map(|(_, c)| *c).collect::<BTreeSet<_>>().len()
    }

    /// Classes not containing any reference family.
    pub fn unlisted(&self) -> Vec<&CandidateClass> {
        self.classes.iter().filter(|c| c.families.is_empty()).collect()
    }

    /// The classes are exactly the listed families, each family its own class.
    pub fn matches_families(&self) -> bool {
        self.all_families_found()
            && self.unlisted().is_empty()
            && self.family_class_count() == self.family_classes.len()
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sl{}: {} candidates in {} classes", self.n, self.candidates, self.classes.len())?;
        for c in &self.classes {
            let fam = if c.families.is_empty() { "-".to_string() } else { c.families.join(", ") };
            let status = if c.is_confirmed() {
                "borel"
            } else if c.battery.passed() {
                "candidate"
            } else {
                "rejected"
            };
            writeln!(f, "  [{:>2}] {:<15} {:<9} {}  families: {fam}", c.size, c.kind.to_string(), status, c.label)?;
        }
        Ok(())
    }
}

/// Reference families `(name, w+, w-, supp)`.
pub fn reference_families(n: usize) -> &'static [(&'static str, &'static str, &'static str, &'static [&'static str])] {
    match n {
        2 => &[("standard", "s1", "", &[]), ("weyl", "s1", "s1", &["a1"])],
        3 => &[
            ("standard", "s1 s2 s1", "", &[]),
            ("non-degenerate a1", "s1 s2 s1", "s1", &["a1"]),
            ("non-degenerate a1+a2", "s1 s2", "s2 s1", &["a1+a2"]),
            ("degenerate a1", "s1 s2", "s1 s2", &["a1"]),
        ],
        4 => &[
            ("standard", "s1 s2 s1 s3 s2 s1", "", &[]),
            ("non-degenerate a1", "s1 s2 s1 s3 s2 s1", "s1", &["a1"]),
            ("non-degenerate a1,a3", "s1 s2 s1 s3 s2 s1", "s1 s3", &["a1", "a3"]),
            ("1.1", "s1 s2 s3 s2 s1", "s1 s2", &["a1"]),
            ("1.2.1", "s1 s2 s3 s2", "s1 s2 s3", &["a1"]),
            ("1.2.2", "s2 s1 s3 s2", "s2 s1 s3", &["a2"]),
            ("2.1", "s1 s2 s3 s2", "s1 s2 s3 s2", &["a1", "a3"]),
            ("2.2", "s2 s1 s3 s2", "s2 s1 s3 s2", &["a2", "a1+a2+a3"]),
        ],
        _ => &[],
    }
}

struct Ctx {
    rs: RootSystem,
    wg: WeylGroup,
    pos: Vec<Root>,
}

impl Ctx {
    fn len(&self, i: usize) -> usize {
        self.wg.get(i).inversions.count_ones() as usize
    }

    fn roots(&self, mask: u64) -> Vec<Root> {
        (0..self.pos.len()).filter(|k| mask >> k & 1 == 1).map(|k| self.pos[k].clone()).collect()
    }

    fn mask(&self, roots: impl IntoIterator<Item = Root>) -> u64 {
        roots
            .into_iter()
            .map(|r| 1u64 << self.pos.iter().position(|p| *p == r).expect("positive root"))
            .fold(0, |a, b| a | b)
    }

    /// Index of `s_S w`.
    fn strip(&self, supp: &[Root], w: usize) -> usize {
        let e = supp.iter().fold(self.wg.get(w).element.clone(), |acc, r| self.rs.reflection_in(r).mul(&acc));
        self.wg.find(&e).expect("group element")
    }

    fn is_candidate(&self, t: Triple, w0_len: usize) -> bool {
        let (ip, im) = (self.wg.get(t.plus).inversions, self.wg.get(t.minus).inversions);
        let common = ip & im;
        let s = self.roots(t.supp);
        if t.supp & !common != 0 {
            return false;
        }
        if s.iter().enumerate().any(|(i, x)| s[i + 1..].iter().any(|y| self.rs.pairing(x, y) != 0)) {
            return false;
        }
        let (sp, sm) = (self.strip(&s, t.plus), self.strip(&s, t.minus));
        if self.len(sp) + s.len() != self.len(t.plus) || self.len(sm) + s.len() != self.len(t.minus) {
            return false;
        }
        let rest = self.roots(common & !t.supp);
        if rest.iter().any(|r| self.rs.simple_index(r).is_some()) {
            return false;
        }
        let linked = |m: &Root| s.iter().any(|nu| nu != m && nu.weakly_below(m) && self.rs.pairing(nu, m) != 0);
        if !rest.iter().all(linked) {
            return false;
        }
        let x = self.rs.inverse(&self.wg.get(sm).element).mul(&self.wg.get(t.plus).element);
        let lx = self.rs.length(&x);
        lx == self.len(sm) + self.len(t.plus) && lx == w0_len
    }

    fn moves(&self, t: Triple) -> Vec<Triple> {
        let n = self.rs.rank();
        let (ip, im) = (self.wg.get(t.plus).inversions, self.wg.get(t.minus).inversions);
        let mut out = Vec::new();
        for i in 0..n {
            let bit = 1u64 << self.pos.iter().position(|p| *p == self.rs.simple(i)).expect("simple root");
            if (ip & bit != 0) == (im & bit != 0) {
                continue;
            }
            let si = self.rs.simple_reflection(i);
            let plus = self.wg.find(&si.mul(&self.wg.get(t.plus).element)).expect("group element");
            let minus = self.wg.find(&si.mul(&self.wg.get(t.minus).element)).expect("group element");
            let supp = self.mask(self.roots(t.supp).iter().map(|r| self.rs.reflect(i, r)));
            out.push(Triple { plus, minus, supp });
        }
        let flip = |w: usize| {
            let word = WeylWord(self.wg.get(w).word.0.iter().map(|&i| n - 1 - i).collect());
            self.wg.find(&self.rs.element(&word)).expect("group element")
        };
        let supp = self.mask(self.roots(t.supp).into_iter().map(|r| Root(r.0.iter().rev().cloned().collect())));
        out.push(Triple { plus: flip(t.plus), minus: flip(t.minus), supp });
        out.push(Triple { plus: t.minus, minus: t.plus, supp: t.supp });
        out
    }
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let next = p[y];
        p[y] = r;
        y = next;
    }
    r
}

/// Candidate triples `(w+, w-, S)` for `U_q(sl_n)`, grouped into classes.
pub fn classify_small(n: usize) -> Result<Classification> {
    if !(2..=4).contains(&n) {
        return Err(Error::InvalidArgument(format!("classification is implemented for 2 <= n <= 4, got {n}")));
    }
    let alg = UqAlgebra::sl(n)?;
    let rs = alg.root_system().clone();
    let wg = WeylGroup::enumerate(&rs, 1000)?;
    let pos = rs.positive_roots().to_vec();
    let ctx = Ctx { rs, wg, pos };
    let w0_len = ctx.pos.len();
    let size = ctx.wg.entries().len();

    let mut cands: Vec<Triple> = (0..size * size)
        .into_par_iter()
        .flat_map_iter(|ab| {
            let (plus, minus) = (ab / size, ab % size);
            let common = ctx.wg.get(plus).inversions & ctx.wg.get(minus).inversions;
            let mut subs = Vec::new();
            let mut s = common;
            loop {
                subs.push(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & common;
            }
            let ctx = &ctx;
            subs.into_iter()
                .map(move |supp| Triple { plus, minus, supp })
                .filter(move |t| ctx.is_candidate(*t, w0_len))
        })
        .collect();
    cands.sort();
    let index: HashMap<Triple, usize> = cands.iter().enumerate().map(|(k, t)| (*t, k)).collect();

    let mut parent: Vec<usize> = (0..cands.len()).collect();
    for (k, t) in cands.iter().enumerate() {
        for m in ctx.moves(*t) {
            let j = *index.get(&m).ok_or_else(|| Error::Internal("candidate set is not closed under the moves".into()))?;
            let (x, y) = (find(&mut parent, k), find(&mut parent, j));
            parent[x] = y;
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for k in 0..cands.len() {
        let r = find(&mut parent, k);
        groups.entry(r).or_default().push(k);
    }

    let families = reference_families(n);
    let mut family_members = Vec::new();
    for (name, wp, wm, supp) in families {
        let plus = ctx.wg.find(&ctx.rs.element(&parse_word(n - 1, wp)?)).expect("group element");
        let minus = ctx.wg.find(&ctx.rs.element(&parse_word(n - 1, wm)?)).expect("group element");
        let roots = supp.iter().map(|s| parse_root(&ctx.rs, s)).collect::<Result<Vec<_>>>()?;
        family_members.push((*name, index.get(&Triple { plus, minus, supp: ctx.mask(roots) }).copied()));
    }

    let mut reps: Vec<(usize, Vec<usize>)> = groups
        .into_values()
        .map(|ks| {
            let best = *ks
                .iter()
                .min_by_key(|&&k| {
                    let t = cands[k];
                    (std::cmp::Reverse(ctx.len(t.plus)), ctx.len(t.minus), t)
                })
                .expect("nonempty class");
            (best, ks)
        })
        .collect();
    reps.sort_by_key(|(b, ks)| {
        let t = cands[*b];
        (t.supp.count_ones(), std::cmp::Reverse(ctx.len(t.plus)), ctx.len(t.minus), ks.len(), t)
    });

    let classes = reps
        .par_iter()
        .map(|(best, ks)| -> Result<CandidateClass> {
            let t = cands[*best];
            let supp: BTreeSet<Root> = ctx.roots(t.supp).into_iter().collect();
            let rcs = candidate_rcs(&alg, &ctx.wg.get(t.plus).word, &ctx.wg.get(t.minus).word, &supp)?;
            let battery = ede_battery(&alg, &rcs)?;
            let kind = if ctx.len(t.minus) == 0 {
                CandidateKind::Standard
            } else if rcs.is_nondegenerate(&alg)? {
                CandidateKind::NonDegenerate
            } else {
                CandidateKind::Degenerate
            };
            let support: Vec<String> = supp.iter().map(|r| ctx.rs.format_root(r)).collect();
            let label = format!(
                "{}|{}|{}",
                word_label(&rcs.w_plus),
                word_label(&rcs.w_minus),
                if support.is_empty() { "-".to_string() } else { support.join(",") }
            );
            let families = family_members
                .iter()
                .filter(|(_, m)| m.is_some_and(|m| ks.contains(&m)))
                .map(|(name, _)| name.to_string())
                .collect();
            Ok(CandidateClass {
                label,
                kind,
                w_plus: rcs.w_plus.clone(),
                w_minus: rcs.w_minus.clone(),
                support,
                size: ks.len(),
                families,
                battery,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let family_classes = family_members
        .iter()
        .map(|(name, m)| (name.to_string(), m.map(|m| reps.iter().position(|(_, ks)| ks.contains(&m)).expect("class"))))
        .collect();
    Ok(Classification { n, candidates: cands.len(), classes, family_classes })
}

fn word_label(w: &WeylWord) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.0.iter().map(|i| format!("s{}", i + 1)).collect()
    }
}

/// The RCS with paired characters on `supp` and `L` the orthogonal complement.
pub fn candidate_rcs(alg: &UqAlgebra, w_plus: &WeylWord, w_minus: &WeylWord, supp: &BTreeSet<Root>) -> Result<TriangularRcs> {
    let (p, m) = paired_characters(alg, supp)?;
    build_rcs(alg, w_plus, w_minus, &p, &m, &orthogonal_lattice(alg, supp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_has_two_classes() {
        let c = classify_small(2).unwrap();
        assert_eq!(c.candidates, 3);
        assert_eq!(c.classes.len(), 2);
        assert!(c.matches_families());
        assert!(c.classes.iter().all(|k| k.is_confirmed()));
    }

    #[test]
    fn sl3_non_degenerate_families_are_reflection_related() {
        let c = classify_small(3).unwrap();
        assert_eq!(c.candidates, 14);
        assert_eq!(c.classes.len(), 3);
        assert!(c.all_families_found());
        let fc: BTreeMap<_, _> = c.family_classes.iter().cloned().collect();
        assert_eq!(fc["non-degenerate a1"], fc["non-degenerate a1+a2"]);
        assert!(c.classes.iter().all(|k| k.battery.passed()));
    }

    #[test]
    fn out_of_range() {
        assert!(classify_small(5).is_err());
        assert!(classify_small(1).is_err());
    }
}
