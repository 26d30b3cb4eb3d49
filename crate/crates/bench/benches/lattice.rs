use std::hint::black_box;

use cdlat_core::{
    build_catalog, build_group, cd_report, enumerate_subgroups, verify_all, GroupSpec,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn subgroup_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_subgroups");
    for (name, spec) in [
        ("A4", GroupSpec::Alternating4),
        ("D6", GroupSpec::Dihedral(6)),
        ("Q16", GroupSpec::quaternion(4)),
        ("Q64", GroupSpec::quaternion(6)),
        (
            "Z2^3xZ8",
            "product:cyclic:2,cyclic:2,cyclic:2,cyclic:8"
                .parse()
                .unwrap(),
        ),
    ] {
        let g = build_group(&spec).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| enumerate_subgroups(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn cd_reports(c: &mut Criterion) {
    let mut group = c.benchmark_group("cd_report");
    for n in 3..=6u32 {
        let g = build_group(&GroupSpec::quaternion(n)).unwrap();
        group.bench_with_input(BenchmarkId::new("Q", 1 << n), &g, |b, g| {
            b.iter(|| cd_report(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn full_verification(c: &mut Criterion) {
    let cat = build_catalog(15, 3..=6).unwrap();
    c.bench_function("verify_all/catalog15", |b| {
        b.iter(|| verify_all(black_box(&cat), 3..=6).unwrap())
    });
}

criterion_group!(benches, subgroup_enumeration, cd_reports, full_verification);
criterion_main!(benches);
