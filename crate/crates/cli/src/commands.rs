use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use qborel::borel::{
    build_rcs, classify_small, commutator_table, default_twist, ede_battery, induced_hilbert, induced_hilbert_brute,
    orthogonal_lattice, paired_characters, reference_table, reference_table_cases, Classification, RcsSpec,
};
use qborel::rootsys::{parse_root, parse_word, CartanType, Root, RootSystem};
use qborel::selftest;
use qborel::uqalg::UqAlgebra;
use qborel::weylsupp::{supplement, verify_kinb, verify_supplement_exhaustive, VerifyReport};
use serde_json::{json, Value};

use crate::{Cli, Command};

pub const MAX_RANK: usize = 5;
pub const MAX_GROUP_ORDER: u128 = 1200;

pub struct Outcome {
    pub name: &'static str,
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

pub fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::WeylSupplement { cartan, rank, w1, w2 } => weyl_supplement(cartan, *rank, w1, w2),
        Command::VerifyKinb { cartan, rank } => verify("verify-kinb", cartan, *rank, verify_kinb),
        Command::VerifySupplement { cartan, rank } => verify("verify-supplement", cartan, *rank, verify_supplement_exhaustive),
        Command::CommutatorTable { algebra, case, latex, verify } => table(algebra, case.as_deref(), *latex, *verify),
        Command::Classify { algebra, check } => classify(algebra, *check),
        Command::EdeCheck { spec } => ede_check(spec),
        Command::Hilbert { spec, max_degree } => hilbert(spec, *max_degree),
        Command::Selftest { instances } => run_selftest(*instances, cli.seed),
    }
}

fn root_system(cartan: &str, rank: usize) -> Result<RootSystem> {
    let ty: CartanType = cartan.parse()?;
    if rank > MAX_RANK {
        bail!("rank {rank} exceeds the limit {MAX_RANK}");
    }
    Ok(RootSystem::new(ty, rank)?)
}

pub fn weyl_group_order(ty: CartanType, rank: usize) -> u128 {
    let fact = |n: usize| (1..=n as u128).product::<u128>();
    match ty {
        CartanType::A => fact(rank + 1),
        CartanType::B | CartanType::C => fact(rank) << rank,
        CartanType::D => fact(rank) << (rank - 1),
        CartanType::G => 12,
    }
}

/// `sl3` or `sl_3` to `3`.
fn parse_sl(s: &str) -> Result<usize> {
    let t = s.trim().to_ascii_lowercase();
    let n: usize = t
        .strip_prefix("sl")
        .map(|r| r.trim_start_matches('_'))
        .and_then(|r| r.parse().ok())
        .with_context(|| format!("expected an algebra like sl3, got {s:?}"))?;
    if !(2..=MAX_RANK + 1).contains(&n) {
        bail!("sl{n}: rank must be between 1 and {MAX_RANK}");
    }
    Ok(n)
}

fn word_text(w: &qborel::WeylWord) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.to_string()
    }
}

fn weyl_supplement(cartan: &str, rank: usize, w1: &str, w2: &str) -> Result<Outcome> {
    let rs = root_system(cartan, rank)?;
    let (a, b) = (parse_word(rank, w1)?, parse_word(rank, w2)?);
    let r = supplement(&rs, &a, &b)?;
    let b_roots: Vec<String> = r.b.iter().map(|x| rs.format_root(x)).collect();
    let mut text = String::new();
    writeln!(text, "w1' = {}", word_text(&r.w1_prime))?;
    writeln!(text, "w2' = {}", word_text(&r.w2_prime))?;
    writeln!(text, "B = {{{}}}", b_roots.join(", "))?;
    writeln!(text, "tail word of w1' = {}", word_text(&r.tail_word))?;
    let json = json!({
        "root_system": rs.label(),
        "w1": word_text(&a),
        "w2": word_text(&b),
        "w1_prime": word_text(&r.w1_prime),
        "w2_prime": word_text(&r.w2_prime),
        "B": b_roots,
        "tail_word": word_text(&r.tail_word),
    });
    Ok(Outcome { name: "weyl-supplement", text, json, ok: true })
}

fn verify(
    name: &'static str,
    cartan: &str,
    rank: usize,
    run: fn(&RootSystem) -> qborel::Result<VerifyReport>,
) -> Result<Outcome> {
    let rs = root_system(cartan, rank)?;
    let order = weyl_group_order(rs.cartan_type(), rank);
    if order > MAX_GROUP_ORDER {
        bail!("|W({})| = {order} exceeds the exhaustive limit {MAX_GROUP_ORDER}", rs.label());
    }
    let r = run(&rs)?;
    let mut text = format!("{}\n", r.summary());
    for (a, b, why) in &r.examples {
        writeln!(text, "  w1 = {a}, w2 = {b}: {why}")?;
    }
    Ok(Outcome { name, text, json: serde_json::to_value(&r)?, ok: r.passed() })
}

fn latex_label(t: &qborel::borel::ReferenceTable, label: &str) -> String {
    let (side, rest) = label.split_at(1);
    let d = t.display_name('x', rest);
    format!("\\bar{{{side}}}_{{{}}}", &d[2..])
}

/// Rewrites the generator names in a basis word for LaTeX output.
fn latex_word(t: &qborel::borel::ReferenceTable, w: &str) -> String {
    w.split(' ')
        .map(|tok| match tok.chars().next() {
            Some('E' | 'F') if tok[1..].chars().all(|c| c.is_ascii_digit()) && tok.len() > 1 => latex_label(t, tok),
            _ => tok.to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn table(algebra: &str, case: Option<&str>, latex: bool, verify: bool) -> Result<Outcome> {
    let n = parse_sl(algebra)?;
    let name = match (n, case) {
        (3, None) | (3, Some("sl3")) => "sl3",
        (4, Some(c)) if c != "sl3" => c,
        (4, None) => bail!("sl4 needs --case, one of {}", reference_table_cases()[1..].join(", ")),
        _ => bail!("no table for sl{n} with case {case:?}"),
    };
    let t = reference_table(name).with_context(|| format!("unknown case {name:?}; known: {}", reference_table_cases().join(", ")))?;
    let alg = UqAlgebra::sl(n)?;
    let rcs = t.build(&alg)?;
    let tab = commutator_table(&alg, &rcs, &|a, b| default_twist(&alg, a, b))?;
    let mut text = String::new();
    writeln!(text, "% case {name}: w+ = {}, w- = {}, supp = {{{}}}", t.w_plus, t.w_minus, t.support.join(", "))?;
    let mut cells = Vec::new();
    for c in &tab.cells {
        let rhs = match &c.expressed {
            Some(terms) if terms.is_empty() => "0".to_string(),
            Some(terms) => terms
                .iter()
                .map(|(b, k)| {
                    let b = if latex { latex_word(t, b) } else { b.clone() };
                    match (b.as_str(), k.as_str()) {
                        ("1", _) => format!("({k})"),
                        (_, "1") => b,
                        _ => format!("({k}) {b}"),
                    }
                })
                .collect::<Vec<_>>()
                .join(" + "),
            None => format!("<{}>", c.value),
        };
        let (r, l) = if latex { (latex_label(t, &c.row), latex_label(t, &c.col)) } else { (c.row.clone(), c.col.clone()) };
        let twist = if latex { format!("q^{{{}}}", c.twist) } else { format!("q^{}", c.twist) };
        if rhs != "0" {
            writeln!(text, "[{r}, {l}]_{{{twist}}} = {rhs}")?;
        }
        cells.push(json!({"row": c.row, "col": c.col, "twist": c.twist, "value": c.value, "expressed": c.expressed}));
    }
    let mut ok = true;
    let mut checks = Vec::new();
    if verify {
        writeln!(text, "% comparison with the reference cells")?;
        for c in t.verify(&alg)? {
            ok &= c.passed();
            let verdict = match (c.twist, &c.ratio) {
                (Some(k), _) => format!("ok (twist q^{k})"),
                (None, Some((k, u))) => format!("MISMATCH: twist q^{k} gives ({u}) times the listed value"),
                (None, None) => "MISMATCH".to_string(),
            };
            if c.expected != "0" || !c.passed() {
                writeln!(text, "%   [{}, {}] = {}: {verdict}", c.row, c.col, c.expected)?;
            }
            checks.push(serde_json::to_value(&c)?);
        }
    }
    let json = json!({
        "case": name,
        "n": n,
        "w_plus": t.w_plus,
        "w_minus": t.w_minus,
        "support": t.support,
        "rows": tab.rows,
        "cols": tab.cols,
        "cells": cells,
        "checks": checks,
    });
    Ok(Outcome { name: "commutator-table", text, json, ok })
}

/// The rcs of a classification class with symbolic characters.
pub fn class_spec(alg: &UqAlgebra, c: &qborel::borel::CandidateClass) -> Result<RcsSpec> {
    let rs = alg.root_system();
    let supp: BTreeSet<Root> = c.support.iter().map(|r| parse_root(rs, r)).collect::<qborel::Result<_>>()?;
    let (p, m) = paired_characters(alg, &supp)?;
    let rcs = build_rcs(alg, &c.w_plus, &c.w_minus, &p, &m, &orthogonal_lattice(alg, &supp))?;
    Ok(RcsSpec::from_rcs(alg, &rcs))
}

fn classify(algebra: &str, check: bool) -> Result<Outcome> {
    let n = parse_sl(algebra)?;
    let c: Classification = classify_small(n)?;
    let alg = UqAlgebra::sl(n)?;
    let mut text = c.to_string();
    let families: Vec<&str> = c.family_classes.iter().map(|(f, _)| f.as_str()).collect();
    writeln!(text, "listed families: {} in {} classes", families.len(), c.family_class_count())?;
    let ok = !check || c.matches_families();
    if check && !ok {
        let missing: Vec<&str> = c.family_classes.iter().filter(|(_, k)| k.is_none()).map(|(f, _)| f.as_str()).collect();
        writeln!(
            text,
            "check failed: {} unlisted classes, missing families {:?}",
            c.unlisted().len(),
            missing
        )?;
    }
    let classes = c
        .classes
        .iter()
        .map(|k| {
            Ok(json!({
                "label": k.label,
                "kind": k.kind,
                "size": k.size,
                "families": k.families,
                "confirmed": k.is_confirmed(),
                "battery": k.battery,
                "rcs": class_spec(&alg, k)?,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    let json = json!({
        "n": c.n,
        "candidates": c.candidates,
        "classes": classes,
        "family_classes": c.family_classes,
        "matches_families": c.matches_families(),
    });
    Ok(Outcome { name: "classify", text, json, ok })
}

pub fn read_spec(path: &Path) -> Result<RcsSpec> {
    let s = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let spec: RcsSpec = serde_json::from_str(&s).with_context(|| format!("parsing {}", path.display()))?;
    if spec.rank > MAX_RANK {
        bail!("rank {} exceeds the limit {MAX_RANK}", spec.rank);
    }
    Ok(spec)
}

fn ede_check(path: &Path) -> Result<Outcome> {
    let spec = read_spec(path)?;
    let alg = spec.algebra()?;
    let rcs = spec.build(&alg)?;
    let r = ede_battery(&alg, &rcs)?;
    let text = format!("{rcs}\n{r}{}\n", if r.passed() { "passed" } else { "FAILED" });
    let json = json!({"rcs": spec, "passed": r.passed(), "checks": r.checks});
    Ok(Outcome { name: "ede-check", text, json, ok: r.passed() })
}

fn hilbert(path: &Path, max_degree: usize) -> Result<Outcome> {
    let spec = read_spec(path)?;
    let alg = spec.algebra()?;
    let rcs = spec.build(&alg)?;
    let t = induced_hilbert(&alg, &rcs, max_degree)?;
    let agree = t == induced_hilbert_brute(&alg, &rcs, max_degree)?;
    let rs = alg.root_system();
    let mut text = String::new();
    let roots: Vec<String> = t.polynomial_roots.iter().map(|r| rs.format_root(r)).collect();
    writeln!(text, "polynomial roots: {}", roots.join(", "))?;
    writeln!(text, "Laurent rank: {}", t.laurent_rank)?;
    for (h, d) in t.by_height.iter().enumerate() {
        writeln!(text, "height {h}: {d}")?;
    }
    writeln!(text, "brute-force enumeration: {}", if agree { "agrees" } else { "DISAGREES" })?;
    let by_degree: Vec<(String, u64)> = t.by_degree.iter().map(|(r, c)| (r.to_string(), *c)).collect();
    let json = json!({
        "polynomial_roots": roots,
        "laurent_rank": t.laurent_rank,
        "by_height": t.by_height,
        "by_degree": by_degree,
        "brute_force_agrees": agree,
    });
    Ok(Outcome { name: "hilbert", text, json, ok: agree })
}

fn run_selftest(instances: usize, seed: u64) -> Result<Outcome> {
    let results = selftest::run_all(instances, seed);
    let mut text = String::new();
    for r in &results {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(text, "{status} {:<24} {:>6} cases {:>3} failures {}", r.name, r.cases, r.failures, r.detail)?;
    }
    let ok = results.iter().all(|r| r.passed());
    writeln!(text, "seed {seed}: {}", if ok { "all suites passed" } else { "FAILURES" })?;
    Ok(Outcome { name: "selftest", text, json: json!({"seed": seed, "suites": results, "passed": ok}), ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_names() {
        assert_eq!(parse_sl("sl3").unwrap(), 3);
        assert_eq!(parse_sl("SL_4").unwrap(), 4);
        assert!(parse_sl("sl1").is_err());
        assert!(parse_sl("sl7").is_err());
        assert!(parse_sl("gl3").is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(weyl_group_order(CartanType::A, 4), 120);
        assert_eq!(weyl_group_order(CartanType::B, 3), 48);
        assert_eq!(weyl_group_order(CartanType::D, 4), 192);
        assert_eq!(weyl_group_order(CartanType::G, 2), 12);
    }
}
