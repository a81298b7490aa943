use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use norden_core::norden::theorem3_criteria;
use norden_core::{build_context, builtin_example, invariance_suite, levi_civita};

fn pipeline(c: &mut Criterion) {
    let spec = builtin_example();
    let metric = spec.metric().unwrap();
    c.bench_function("levi_civita", |b| {
        b.iter(|| levi_civita(black_box(&spec), black_box(&metric)).unwrap())
    });
    c.bench_function("build_context", |b| b.iter(|| build_context(black_box(&spec)).unwrap()));
    let ctx = build_context(&spec).unwrap();
    c.bench_function("invariance_suite", |b| b.iter(|| invariance_suite(black_box(&ctx))));
    c.bench_function("theorem3_criteria", |b| b.iter(|| theorem3_criteria(black_box(&ctx))));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = pipeline
}
criterion_main!(benches);
