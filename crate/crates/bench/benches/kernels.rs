use std::collections::BTreeSet;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qborel::borel::{
    build_rcs, classify_small, commutator_table, default_twist, orthogonal_lattice, paired_characters, reference_table, t_v_reflect,
    tail_reflector,
};
use qborel::rootsys::{parse_root, parse_word, Root, RootSystem};
use qborel::selftest::{mixed, rng};
use qborel::uqalg::UqAlgebra;
use qborel::weylsupp::{verify_kinb, verify_supplement_exhaustive};

fn weyl(c: &mut Criterion) {
    let a4 = RootSystem::a(4);
    c.bench_function("verify_supplement A4", |b| b.iter(|| verify_supplement_exhaustive(black_box(&a4)).unwrap()));
    c.bench_function("verify_kinb A4", |b| b.iter(|| verify_kinb(black_box(&a4)).unwrap()));
}

fn normal_form(c: &mut Criterion) {
    let a = UqAlgebra::sl(4).unwrap();
    let mut g = rng(1);
    let xs: Vec<_> = (0..16).map(|_| mixed(&a, &mut g, 3)).collect();
    c.bench_function("normal form products sl4", |b| {
        b.iter(|| {
            for w in xs.windows(2) {
                black_box(a.mul(&w[0], &w[1]));
            }
        })
    });
}

fn borel(c: &mut Criterion) {
    c.bench_function("classify sl4", |b| b.iter(|| classify_small(black_box(4)).unwrap()));
    let a = UqAlgebra::sl(4).unwrap();
    let t = reference_table("1.2.2").unwrap();
    let rcs = t.build(&a).unwrap();
    c.bench_function("commutator table 1.2.2", |b| {
        b.iter(|| commutator_table(&a, black_box(&rcs), &|x, y| default_twist(&a, x, y)).unwrap())
    });
    let a3 = UqAlgebra::sl(3).unwrap();
    let supp: BTreeSet<Root> = [parse_root(a3.root_system(), "a1+a2").unwrap()].into();
    let (p, m) = paired_characters(&a3, &supp).unwrap();
    let w = |s| parse_word(2, s).unwrap();
    let rcs3 = build_rcs(&a3, &w("s1 s2"), &w("s2 s1"), &p, &m, &orthogonal_lattice(&a3, &supp)).unwrap();
    let v = tail_reflector(&a3, &rcs3).unwrap();
    c.bench_function("reflect sl3", |b| b.iter(|| t_v_reflect(&a3, black_box(&rcs3), &v).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = weyl, normal_form, borel
}
criterion_main!(benches);
