use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use liefusion_core::repbuilder::{self, build_module};
use liefusion_core::weights::weight_system;
use liefusion_core::{LieContext, LieType, RootSystem, Weight};

fn fw(i: usize) -> Weight {
    Weight::fundamental(4, i)
}

fn weights(c: &mut Criterion) {
    let rs = RootSystem::build(LieType::F4).unwrap();
    c.bench_function("weight_system F4 (1010)", |b| {
        b.iter(|| weight_system(&rs, black_box(&(&fw(0) + &fw(2)))).unwrap())
    });
}

fn tensor(c: &mut Criterion) {
    let rs = RootSystem::build(LieType::F4).unwrap();
    c.bench_function("decompose F4 (0010)x(0010)", |b| {
        b.iter(|| liefusion_core::tensor::decompose(&rs, black_box(&fw(2)), black_box(&fw(2))).unwrap())
    });
}

fn modules(c: &mut Criterion) {
    let rs = RootSystem::build(LieType::F4).unwrap();
    let ws = weight_system(&rs, &fw(3)).unwrap();
    let mut g = c.benchmark_group("explicit modules");
    g.sample_size(20);
    g.bench_function("build_module F4 (0001)", |b| {
        b.iter(|| build_module(&rs, black_box(&ws)).unwrap())
    });
    g.finish();
}

fn kspace_scan(c: &mut Criterion) {
    let ctx = LieContext::new(LieType::F4).unwrap();
    let m = ctx.module(&fw(3)).unwrap();
    let labels: Vec<Weight> = (0..16)
        .map(|n| Weight::new((0..4).map(|i| (n >> i) & 1).collect()))
        .collect();
    let mut g = c.benchmark_group("kspace");
    g.sample_size(20);
    g.bench_function("corank scan over {0,1}^4", |b| {
        b.iter(|| {
            let mut total = 0;
            for mu in &labels {
                for nu in &labels {
                    if m.weight_space_dim(&(nu - mu)) > 0 {
                        total += repbuilder::fusion_via_kspace(ctx.root_system(), &m, mu, nu).unwrap();
                    }
                }
            }
            total
        })
    });
    g.finish();
}

criterion_group!(benches, weights, tensor, modules, kspace_scan);
criterion_main!(benches);
