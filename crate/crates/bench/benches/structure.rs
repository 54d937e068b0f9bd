use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use matchcover::corpus::{all_graphs, named::petersen};
use matchcover::{
    augment_to_matching_covered, build_gkm, classify, equivalent_classes, scan_edge_subsets,
    verify_construction, VerifyMode,
};
use matchcover_bench::{covered, sparse_bipartite};

fn classes(c: &mut Criterion) {
    let g = covered(16);
    c.bench_function("equivalent_classes/16", |b| {
        b.iter(|| equivalent_classes(black_box(&g)))
    });
    c.bench_function("classify/16", |b| b.iter(|| classify(black_box(&g))));
}

fn augmentation(c: &mut Criterion) {
    let g = sparse_bipartite(10);
    c.bench_function("augment/20", |b| {
        b.iter(|| augment_to_matching_covered(black_box(&g)))
    });
}

fn construction(c: &mut Criterion) {
    let r = build_gkm(3, 3).unwrap();
    let mut group = c.benchmark_group("verify_g33");
    group.sample_size(20);
    group.bench_function("enumeration", |b| {
        b.iter(|| verify_construction(black_box(&r), VerifyMode::Enumeration))
    });
    group.bench_function("structural", |b| {
        b.iter(|| verify_construction(black_box(&r), VerifyMode::Structural))
    });
    group.finish();
}

fn searches(c: &mut Criterion) {
    let p = petersen();
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("petersen_subsets", |b| {
        b.iter(|| scan_edge_subsets(black_box(&p)))
    });
    group.bench_function("all_graphs/7", |b| b.iter(|| all_graphs(black_box(7))));
    group.finish();
}

criterion_group!(benches, classes, augmentation, construction, searches);
criterion_main!(benches);
