use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use corank::irrep::{build_irrep, DEFAULT_DIM_GUARD};
use corank::linalg::{rank_bareiss, rank_gauss};
use corank::ranklab::{corank1_pipeline, sl2_scan, wedge_kernel_compare};
use corank::tensor::{decompose, HomModule};
use corank::{Lab, LabConfig, RootSystem, Weight};
use corank_bench::corank_one_matrix;

fn rank(c: &mut Criterion) {
    let m = corank_one_matrix(24);
    c.bench_function("rank_bareiss 24x24", |b| b.iter(|| rank_bareiss(black_box(&m))));
    c.bench_function("rank_gauss 24x24", |b| b.iter(|| rank_gauss(black_box(&m))));
}

fn modules(c: &mut Criterion) {
    let a2 = Arc::new(RootSystem::new("A2".parse().unwrap()).unwrap());
    let g2 = Arc::new(RootSystem::new("G2".parse().unwrap()).unwrap());
    c.bench_function("build_irrep A2 (2,2)", |b| {
        b.iter(|| build_irrep(&a2, black_box(&Weight(vec![2, 2])), DEFAULT_DIM_GUARD).unwrap())
    });
    c.bench_function("build_irrep G2 (1,1)", |b| {
        b.iter(|| build_irrep(&g2, black_box(&Weight(vec![1, 1])), DEFAULT_DIM_GUARD).unwrap())
    });
    let v = Arc::new(build_irrep(&a2, &Weight(vec![1, 1]), DEFAULT_DIM_GUARD).unwrap());
    let hom = HomModule::new(v.clone(), v).unwrap();
    c.bench_function("decompose End(V(1,1)) A2", |b| b.iter(|| decompose(black_box(&hom)).unwrap()));
}

fn pipelines(c: &mut Criterion) {
    c.bench_function("pipeline A2 (1,0) (2,0) (1,1)", |b| {
        b.iter(|| {
            let lab = Lab::default();
            corank1_pipeline(
                &lab,
                "A2".parse().unwrap(),
                &Weight(vec![1, 0]),
                &Weight(vec![2, 0]),
                &Weight(vec![1, 1]),
            )
            .unwrap()
        })
    });
    c.bench_function("sl2_scan max_n=6", |b| {
        b.iter(|| sl2_scan(&Lab::new(LabConfig::default()), black_box(6)).unwrap())
    });
    c.bench_function("wedge_kernel_compare 6 2 2", |b| {
        b.iter(|| wedge_kernel_compare(black_box(6), 2, 2).unwrap())
    });
}

criterion_group!(benches, rank, modules, pipelines);
criterion_main!(benches);
