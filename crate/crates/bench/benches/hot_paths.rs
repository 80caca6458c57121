use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use opendoor::{
    delta_at, dilog, f_eval, max_arg, qc_eval, qc_series, rat, rho, ComplexVal, EvalConfig,
};

fn bench_dilog(c: &mut Criterion) {
    let z = ComplexVal::from_polar(1.0, 2.2);
    c.bench_function("dilog boundary point", |b| {
        b.iter(|| dilog(black_box(z)).unwrap())
    });
}

fn bench_qc_eval(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let z = ComplexVal::from_polar(1.0, 2.2);
    c.bench_function("qc_eval boundary point", |b| {
        b.iter(|| qc_eval(black_box(3.0), black_box(z), &cfg).unwrap())
    });
    c.bench_function("f_eval near c0", |b| {
        b.iter(|| f_eval(black_box(3.0276), &cfg).unwrap())
    });
}

fn bench_exact(c: &mut Criterion) {
    c.bench_function("qc_series exact to n=15", |b| {
        b.iter(|| qc_series(black_box(15)))
    });
    let point = rat(7, 2);
    c.bench_function("delta_at n=10", |b| {
        b.iter(|| delta_at(black_box(10), &point).unwrap())
    });
    let tol = rat(1, 1_000_000);
    c.bench_function("rho n=6 certified bracket", |b| {
        b.iter(|| rho(black_box(6), &tol).unwrap())
    });
}

fn bench_geometry(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let mut group = c.benchmark_group("geometry");
    group.sample_size(10);
    group.bench_function("max_arg c=3", |b| {
        b.iter(|| max_arg(black_box(3.0), &cfg).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_dilog, bench_qc_eval, bench_exact, bench_geometry);
criterion_main!(benches);
