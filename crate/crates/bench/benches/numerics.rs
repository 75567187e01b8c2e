use criterion::{criterion_group, criterion_main, Criterion};
use moduli_core::moduli::{min_delta_nonempty, IntervalLabel, Parity};
use moduli_core::oracle::h0_ideal_oracle;
use moduli_core::{
    curve_invariants, determinantal_curve, hilbert_profile, hypersurface, optimal_parameters,
    BigInt,
};
use std::hint::black_box;

fn curves(c: &mut Criterion) {
    c.bench_function("curve_invariants s=12", |b| {
        let curve = determinantal_curve(12).unwrap();
        b.iter(|| curve_invariants(black_box(&curve)))
    });
    c.bench_function("optimal_parameters delta=40", |b| {
        b.iter(|| optimal_parameters(black_box(40)).unwrap())
    });
}

fn intervals(c: &mut Criterion) {
    c.bench_function("min_delta_nonempty two_component even", |b| {
        b.iter(|| min_delta_nonempty(black_box(IntervalLabel::TwoComponent), Parity::Even).unwrap())
    });
}

fn natural(c: &mut Criterion) {
    let x = hypersurface(20).unwrap();
    let c2 = BigInt::from(10_000);
    c.bench_function("hilbert_profile delta=20", |b| {
        b.iter(|| hilbert_profile(black_box(&x), &c2, -60, 60).unwrap())
    });
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("h0_ideal s=3 n=9 p=32003", |b| {
        b.iter(|| h0_ideal_oracle(3, black_box(9), 32003, 7).unwrap())
    });
    group.bench_function("h0_ideal s=4 n=12 p=32003", |b| {
        b.iter(|| h0_ideal_oracle(4, black_box(12), 32003, 7).unwrap())
    });
    group.finish();
}

criterion_group!(benches, curves, intervals, natural, oracle);
criterion_main!(benches);
