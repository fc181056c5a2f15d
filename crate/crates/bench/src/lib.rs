//! Benchmark bodies, shared by `benches/pipeline.rs`.

use std::hint::black_box;

use criterion::{BenchmarkId, Criterion};
use knotsurg_core::{
    alexander_expr, alexander_fox_oracle, alexander_torus, analyze_family, certify_unbounded,
    verify_certificate, GroupPresentation, KnotExpr, TorusKnotSpec,
};

pub fn torus_closed_formula(c: &mut Criterion) {
    let mut group = c.benchmark_group("alexander_torus");
    for p in [10u64, 100, 500] {
        let k = TorusKnotSpec::new(p, p + 1).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(p), &k, |b, &k| {
            b.iter(|| alexander_torus(black_box(k)).unwrap())
        });
    }
    group.finish();
}

pub fn fox_oracle(c: &mut Criterion) {
    let k = TorusKnotSpec::new(8, 9).unwrap();
    let g = GroupPresentation::torus(k).unwrap();
    let ab = GroupPresentation::torus_abelianization(k).unwrap();
    c.bench_function("fox_oracle T(8,9)", |b| {
        b.iter(|| alexander_fox_oracle(black_box(&g), black_box(&ab)).unwrap())
    });
}

pub fn connected_sum(c: &mut Criterion) {
    let k: KnotExpr = "sum(torus(7,8),sum(torus(5,6),mirror(torus(2,3))))"
        .parse()
        .unwrap();
    c.bench_function("alexander_expr triple sum", |b| {
        b.iter(|| alexander_expr(black_box(&k)).unwrap())
    });
}

pub fn family_sweep(c: &mut Criterion) {
    c.bench_function("analyze_family 1..=200", |b| {
        b.iter(|| analyze_family(1, 1, black_box(200)).unwrap())
    });
}

pub fn certificates(c: &mut Criterion) {
    c.bench_function("certify_unbounded(200)", |b| {
        b.iter(|| certify_unbounded(black_box(200), 1000).unwrap())
    });
    let cert = certify_unbounded(200, 1000).unwrap();
    c.bench_function("verify_certificate(200)", |b| {
        b.iter(|| verify_certificate(black_box(&cert), 1))
    });
}

pub fn benchmarks(c: &mut Criterion) {
    torus_closed_formula(c);
    fox_oracle(c);
    connected_sum(c);
    family_sweep(c);
    certificates(c);
}
