//! Sequential vs parallel PBW arithmetic on realistic ghost workloads.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use superhc::hc::PairContext;

fn bench_multiply(c: &mut Criterion) {
    let ctx = PairContext::from_slug("osp2-4.osp1-4").expect("realize osp(2|4)/osp(1|4)");
    let omega0 = ctx.casimir_even().expect("casimir of g_0");
    let omega0_sq = omega0.multiply(&omega0).expect("square");

    let mut group = c.benchmark_group("multiply_omega0_cube");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(omega0_sq.multiply(&omega0).unwrap()))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(omega0_sq.multiply_seq(&omega0).unwrap()))
    });
    group.finish();
}

fn bench_ghost_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("ghost_generator");
    group.sample_size(10);
    group.bench_function("osp2-2.osp1-2", |b| {
        b.iter(|| {
            let ctx = PairContext::from_slug("osp2-2.osp1-2").unwrap();
            black_box(ctx.ghost_generator().unwrap().hc_image)
        })
    });
    group.finish();
}

criterion_group!(benches, bench_multiply, bench_ghost_pipeline);
criterion_main!(benches);
