//! One PASS/FAIL line per acceptance criterion. Criteria whose reference
//! statements do not hold are expected to FAIL; the process fails only when
//! a status differs from its expected status.


use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use qborel::selftest::checks;
use qborel::borel::{
    build_rcs, classify_small, ede_battery, induced_hilbert, induced_hilbert_brute, minuscule_commutator_probe,
    nondegenerate_borel, paired_characters, reference_table, reference_table_cases, reference_families, weyl_constant,
    weyl_constant_variants, Verdict,
};
use qborel::coeff::{q_diff, RationalFunction, Scalar, SymbolicScalar};
use qborel::coideal::{character_shift, character_shift_closed, Character, PbwAlgebra, Side};
use qborel::rootsys::{parse_root, parse_word, CartanType, Root, RootSystem};
use qborel::uqalg::UqAlgebra;
use qborel::weylsupp::{verify_kinb, verify_supplement_exhaustive};

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Duration,
    expect_pass: bool,
}

const CRITERIA: [Criterion; 13] = [
    Criterion { id: 1, name: "Weyl-algebra constant", limit: Duration::from_secs(1), expect_pass: true },
    Criterion { id: 2, name: "sl3 relation table", limit: Duration::from_secs(10), expect_pass: false },
    Criterion { id: 3, name: "sl4 relation tables", limit: Duration::from_secs(300), expect_pass: false },
    Criterion { id: 4, name: "commutator vanishing", limit: Duration::from_secs(60), expect_pass: true },
    Criterion { id: 5, name: "character-shift closed form", limit: Duration::from_secs(120), expect_pass: true },
    Criterion { id: 6, name: "r-map suite", limit: Duration::from_secs(120), expect_pass: true },
    Criterion { id: 7, name: "Weyl supplement", limit: Duration::from_secs(60), expect_pass: true },
    Criterion { id: 8, name: "simple roots in B", limit: Duration::from_secs(300), expect_pass: true },
    Criterion { id: 9, name: "normal-form soundness", limit: Duration::from_secs(180), expect_pass: true },
    Criterion { id: 10, name: "ede battery", limit: Duration::from_secs(60), expect_pass: true },
    Criterion { id: 11, name: "minuscule counter-indicator", limit: Duration::from_secs(10), expect_pass: true },
    Criterion { id: 12, name: "induced-module Hilbert table", limit: Duration::from_secs(10), expect_pass: true },
    Criterion { id: 13, name: "classification", limit: Duration::from_secs(600), expect_pass: false },
];

fn weyl_algebra_constant() -> (bool, String) {
    let q2 = RationalFunction::q_pow(2);
    let want = q2.checked_div(&(&(&RationalFunction::one() - &q2) * &q_diff(1))).unwrap();
    let mut ok = true;
    for n in 2..=4 {
        let a = UqAlgebra::sl(n).unwrap();
        for i in 0..a.rank() {
            ok &= weyl_constant(&a, i).unwrap() == want;
        }
    }
    let v = weyl_constant_variants(&UqAlgebra::sl(2).unwrap(), 0).unwrap();
    ok &= v[0].2 && !v[1].2;
    let notes: Vec<String> = v.iter().map(|(s, _, m)| format!("{s}: {}", if *m { "matches" } else { "differs" })).collect();
    (ok, format!("lam lam' = {want}; {}", notes.join(", ")))
}

fn table_summary(name: &str) -> (bool, bool, String) {
    let t = reference_table(name).unwrap();
    let a = UqAlgebra::sl(t.n).unwrap();
    let cells = t.verify(&a).unwrap();
    let bad: Vec<String> = cells.iter().filter(|c| !c.passed()).map(|c| format!("[{}, {}]", c.row, c.col)).collect();
    let corrected = t.verify_corrected(&a).unwrap();
    let corr_ok = corrected.iter().all(|c| c.2);
    let detail = format!(
        "{name}: {}/{} printed cells hold, {} corrected relations {}{}",
        cells.len() - bad.len(),
        cells.len(),
        corrected.len(),
        if corr_ok { "hold" } else { "FAIL" },
        if bad.is_empty() { String::new() } else { format!(" (failing: {})", bad.join(" ")) }
    );
    (bad.is_empty(), corr_ok, detail)
}

fn sl3_table() -> (bool, String) {
    let (printed, corrected, detail) = table_summary("sl3");
    assert!(corrected, "{detail}");
    (printed, detail)
}

fn sl4_tables() -> (bool, String) {
    let mut ok = true;
    let mut details = Vec::new();
    for case in reference_table_cases().into_iter().filter(|c| *c != "sl3") {
        let (printed, corrected, detail) = table_summary(case);
        assert!(corrected, "{detail}");
        ok &= printed;
        details.push(detail);
    }
    (ok, details.join("; "))
}

fn commutator_vanishing() -> (bool, String) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 2..=3 {
        let a = UqAlgebra::sl(n).unwrap();
        let rs = a.root_system();
        for i in 0..a.rank() {
            let rcs = nondegenerate_borel(&a, &[i]).unwrap();
            let alpha = rs.simple(i);
            let f = rcs.f_gen(&alpha).unwrap().shifted();
            for x in rcs.e_gens.iter().filter(|x| x.root != alpha) {
                let c = a.q_commutator(f, x.shifted(), &SymbolicScalar::q_pow(-rs.pairing(&x.root, &alpha)));
                checked += 1;
                if !c.is_zero() {
                    bad.push(format!("sl{n} a{}: {}", i + 1, x.label));
                }
            }
        }
    }
    (bad.is_empty(), format!("{checked} commutators, {} nonzero {bad:?}", bad.len()))
}

fn character_shift_agreement() -> (bool, String) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (n, c) in [(3, vec![0]), (4, vec![0]), (4, vec![0, 2])] {
        let a = UqAlgebra::sl(n).unwrap();
        let rcs = nondegenerate_borel(&a, &c).unwrap();
        let pbw = PbwAlgebra::new(&a, Side::Plus, &rcs.w_plus).unwrap();
        for (beta, x) in pbw.roots().iter().zip(pbw.generators()) {
            let direct = character_shift(&pbw, &rcs.phi_plus, x).unwrap();
            let closed = character_shift_closed(&pbw, &rcs.phi_plus, x).unwrap();
            checked += 1;
            if direct != closed {
                bad.push(format!("sl{n} {c:?} {beta}"));
            }
        }
    }
    (bad.is_empty(), format!("{checked} generators, {} disagreements {bad:?}", bad.len()))
}

fn r_map_suite() -> (bool, String) {
    let runs = [
        ("product rules", checks::product_rules(200, 61)),
        ("commutations", checks::commutations(200, 62)),
        ("E-commutator on U-", checks::e_commutator(200, 63)),
        ("zero patterns", checks::zero_patterns(200, 64)),
        ("tau conjugation", checks::tau_conjugation(200, 65)),
    ];
    let ok = runs.iter().all(|(_, b)| b.is_empty());
    let d: Vec<String> = runs.iter().map(|(n, b)| format!("{n} {} failures", b.len())).collect();
    (ok, format!("200 instances each: {}", d.join(", ")))
}

fn weyl_supplement() -> (bool, String) {
    let mut ok = true;
    let mut d = Vec::new();
    for n in 2..=4 {
        let r = verify_supplement_exhaustive(&RootSystem::a(n)).unwrap();
        ok &= r.passed();
        d.push(format!("A{n}: {} pairs, {} counterexamples", r.pairs_checked, r.counterexamples));
    }
    (ok, d.join("; "))
}

fn kinb() -> (bool, String) {
    let mut ok = true;
    let mut d = Vec::new();
    let proved =
        [(CartanType::A, 1), (CartanType::A, 2), (CartanType::A, 3), (CartanType::A, 4), (CartanType::B, 2), (CartanType::G, 2)];
    for (t, r) in proved {
        let rep = verify_kinb(&RootSystem::new(t, r).unwrap()).unwrap();
        ok &= rep.counterexamples == 0;
        d.push(format!("{t}{r}: {}", rep.counterexamples));
    }
    for (t, r) in [(CartanType::B, 3), (CartanType::C, 3)] {
        let rep = verify_kinb(&RootSystem::new(t, r).unwrap()).unwrap();
        d.push(format!("{t}{r} (evidence): {} pairs, {} counterexamples", rep.pairs_checked, rep.counterexamples));
    }
    (ok, format!("counterexamples {}", d.join(", ")))
}

fn normal_forms() -> (bool, String) {
    let assoc: Vec<usize> = (1..=4).map(|r| checks::associativity(r, 200, 90 + r as u64).len()).collect();
    let (bad, equal, unequal) = checks::oracle(100, 99);
    let ok = assoc.iter().all(|&b| b == 0) && bad.is_empty();
    (
        ok,
        format!(
            "associativity failures by rank {assoc:?}; oracle {} disagreements over {equal} equal and {unequal} unequal pairs",
            bad.len()
        ),
    )
}

fn sl3_rcs(wp: &str, wm: &str, plus: Character, minus: Character, l: &[Root]) -> (UqAlgebra, qborel::borel::TriangularRcs) {
    let a = UqAlgebra::sl(3).unwrap();
    let rcs = build_rcs(&a, &parse_word(2, wp).unwrap(), &parse_word(2, wm).unwrap(), &plus, &minus, l).unwrap();
    (a, rcs)
}

fn ede() -> (bool, String) {
    let mut ok = true;
    let mut listed = 0;
    for n in 2..=4 {
        let a = UqAlgebra::sl(n).unwrap();
        for (_, wp, wm, supp) in reference_families(n) {
            let s: BTreeSet<Root> = supp.iter().map(|r| parse_root(a.root_system(), r).unwrap()).collect();
            let rcs = qborel::borel::candidate_rcs(&a, &parse_word(n - 1, wp).unwrap(), &parse_word(n - 1, wm).unwrap(), &s)
                .unwrap();
            ok &= ede_battery(&a, &rcs).unwrap().passed();
            listed += 1;
        }
    }
    let lam = SymbolicScalar::lam;
    let a1 = Root(vec![1, 0]);
    let a12 = Root(vec![1, 1]);
    let sl3_supp = |r: &Root| -> (Character, Character) {
        let s: BTreeSet<Root> = [r.clone()].into();
        paired_characters(&UqAlgebra::sl(3).unwrap(), &s).unwrap()
    };
    let a = UqAlgebra::sl(2).unwrap();
    let w = parse_word(1, "s1").unwrap();
    let alpha = Root(vec![1]);
    let v1 = build_rcs(
        &a,
        &w,
        &w,
        &Character::new([(alpha.clone(), lam(1))]),
        &Character::new([(alpha, lam(2))]),
        &[],
    )
    .unwrap();
    let (p1, _) = sl3_supp(&a1);
    let (p3, m3) = sl3_supp(&a1);
    let violators = vec![
        ("wrong lam lam'", a, v1, "weyl-pair"),
        {
            let (a, r) = sl3_rcs("s1 s2 s1", "s1", p1, Character::trivial(), &[Root(vec![1, 2])]);
            ("support/intersection mismatch", a, r, "simple-intersection")
        },
        {
            let (a, r) = sl3_rcs("s1 s2 s1", "s1 s2", p3, m3, &[Root(vec![1, 2])]);
            ("length violation", a, r, "deletion-length")
        },
        {
            let (a, r) = sl3_rcs(
                "s1 s2",
                "s2 s1",
                Character::new([(a12.clone(), lam(1))]),
                Character::new([(a12.clone(), lam(2))]),
                &[Root(vec![1, -1])],
            );
            ("independent lam on a1+a2", a, r, "support-product")
        },
        {
            let (a, r) = sl3_rcs("s1 s2", "s2 s1", Character::trivial(), Character::trivial(), &[]);
            ("empty support on s1s2 | s2s1", a, r, "minuscule-commutator")
        },
    ];
    let mut d = vec![format!("{listed} listed families pass")];
    for (name, a, rcs, check) in violators {
        let rep = ede_battery(&a, &rcs).unwrap();
        let c = rep.checks.iter().find(|c| c.name == check).unwrap();
        let caught = c.verdict == Verdict::Fail && !c.witness.is_empty();
        ok &= caught;
        d.push(format!("{name} -> {check} {} ({})", c.verdict, c.witness));
    }
    (ok, d.join("; "))
}

fn minuscule() -> (bool, String) {
    let (a, rcs) = sl3_rcs("s1 s2", "s2 s1", Character::trivial(), Character::trivial(), &[]);
    let mu = Root(vec![1, 1]);
    let e = rcs.e_gen(&mu).unwrap().shifted().to_rf().unwrap();
    let f = rcs.f_gen(&mu).unwrap().shifted().to_rf().unwrap();
    let p = minuscule_commutator_probe(&a, &mu, &e, &f).unwrap();
    (p.detects() && p.eigenvalue != "0", format!("[Eb12, Fb12]_1 v_{} = ({}) v_{}; nilpotent: {}", p.vector, p.eigenvalue, p.vector, p.nilpotent))
}

fn hilbert() -> (bool, String) {
    let a = UqAlgebra::sl(3).unwrap();
    let rcs = nondegenerate_borel(&a, &[0]).unwrap();
    let t = induced_hilbert(&a, &rcs, 8).unwrap();
    let b = induced_hilbert_brute(&a, &rcs, 8).unwrap();
    (t == b, format!("by height {:?}, Laurent rank {}", t.by_height, t.laurent_rank))
}

fn classification() -> (bool, String) {
    let mut ok = true;
    let mut d = Vec::new();
    for n in 2..=4 {
        let c = classify_small(n).unwrap();
        ok &= c.matches_families();
        let extra: Vec<&str> = c.unlisted().iter().map(|k| k.label.as_str()).collect();
        d.push(format!(
            "sl{n}: {} classes, {} listed families in {} classes, all found: {}, unlisted {extra:?}",
            c.classes.len(),
            c.family_classes.len(),
            c.family_class_count(),
            c.all_families_found()
        ));
    }
    (ok, d.join("; "))
}

fn main() {
    let runs: [fn() -> (bool, String); 13] = [
        weyl_algebra_constant,
        sl3_table,
        sl4_tables,
        commutator_vanishing,
        character_shift_agreement,
        r_map_suite,
        weyl_supplement,
        kinb,
        normal_forms,
        ede,
        minuscule,
        hilbert,
        classification,
    ];
    let mut mismatches = Vec::new();
    for (c, run) in CRITERIA.iter().zip(runs) {
        let t = Instant::now();
        let (ok, detail) = run();
        let el = t.elapsed();
        let pass = ok && el <= c.limit;
        println!(
            "criterion {:>2} {} {} [{:.2}s, limit {}s] {}",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.name,
            el.as_secs_f64(),
            c.limit.as_secs(),
            detail
        );
        if pass != c.expect_pass {
            mismatches.push(c.id);
        }
    }
    let expected_fail: Vec<usize> = CRITERIA.iter().filter(|c| !c.expect_pass).map(|c| c.id).collect();
    println!("expected FAIL: {expected_fail:?}");
    if !mismatches.is_empty() {
        println!("status differs from expectation for criteria {mismatches:?}");
        std::process::exit(1);
    }
    println!("acceptance: all statuses as expected");
}
