use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use nanoshuttle_bench::{forward_sweep, quiet_model, reverse_sweep};
use nanoshuttle_core::analysis::{detect_peaks, DEFAULT_MIN_HEIGHT_PA, DEFAULT_MIN_PROMINENCE_PA};
use nanoshuttle_core::mechanics::{zigzag_noise, MechanicalParams};
use nanoshuttle_core::spectrum::{enumerate_levels, BoxGeometry};
use nanoshuttle_core::transport::simulate_drain_sweep;

fn bench_enumerate(c: &mut Criterion) {
    c.bench_function("enumerate_levels_950meV", |b| {
        b.iter(|| enumerate_levels(black_box(BoxGeometry::default()), black_box(950.0)))
    });
}

fn bench_simulate(c: &mut Criterion) {
    let model = quiet_model();
    let fwd = forward_sweep();
    let rev = reverse_sweep();
    c.bench_function("simulate_forward_1mV", |b| {
        b.iter(|| simulate_drain_sweep(black_box(&model), black_box(&fwd)).unwrap())
    });
    c.bench_function("simulate_reverse_1mV", |b| {
        b.iter(|| simulate_drain_sweep(black_box(&model), black_box(&rev)).unwrap())
    });
}

fn bench_detect(c: &mut Criterion) {
    let model = quiet_model();
    let trace = simulate_drain_sweep(&model, &forward_sweep()).unwrap();
    c.bench_function("detect_peaks_forward", |b| {
        b.iter(|| {
            detect_peaks(
                black_box(&trace),
                DEFAULT_MIN_HEIGHT_PA,
                DEFAULT_MIN_PROMINENCE_PA,
            )
        })
    });
}

fn bench_noise(c: &mut Criterion) {
    let params = MechanicalParams::default();
    c.bench_function("zigzag_noise_100k", |b| {
        b.iter(|| zigzag_noise(black_box(&params), black_box(100_000), black_box(42)))
    });
}

criterion_group!(
    benches,
    bench_enumerate,
    bench_simulate,
    bench_detect,
    bench_noise
);
criterion_main!(benches);
