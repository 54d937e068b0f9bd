use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use matchcover::corpus::named::petersen;
use matchcover::{
    build_gkm, enumerate_perfect_matchings, find_perfect_matching, is_matching_covered,
};
use matchcover_bench::{covered, regular_bipartite};

fn maximum_matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("perfect_matching");
    for h in [8, 16, 32] {
        let g = regular_bipartite(h, 3);
        group.bench_with_input(BenchmarkId::new("bipartite", 2 * h), &g, |b, g| {
            b.iter(|| find_perfect_matching(black_box(g)))
        });
    }
    for n in [16, 32, 64] {
        let g = covered(n);
        group.bench_with_input(BenchmarkId::new("general", n), &g, |b, g| {
            b.iter(|| find_perfect_matching(black_box(g)))
        });
    }
    group.finish();
}

fn matching_covered(c: &mut Criterion) {
    let g = covered(24);
    c.bench_function("is_matching_covered/24", |b| {
        b.iter(|| is_matching_covered(black_box(&g)))
    });
}

fn enumeration(c: &mut Criterion) {
    let p = petersen();
    c.bench_function("enumerate/petersen", |b| {
        b.iter(|| enumerate_perfect_matchings(black_box(&p), None))
    });
    let g = build_gkm(3, 2).unwrap().graph;
    c.bench_function("enumerate/g32", |b| {
        b.iter(|| enumerate_perfect_matchings(black_box(&g), None))
    });
}

criterion_group!(benches, maximum_matching, matching_covered, enumeration);
criterion_main!(benches);
