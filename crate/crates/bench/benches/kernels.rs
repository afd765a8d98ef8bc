//! Microbenchmarks for the hot kernels: directional products, the ternary
//! bracket, the five-argument identity residual, and a full induced-bracket
//! report over matrix units.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nambu3_core::algebra::{fi_residual_matrix_cubic, mul_dir, quantum_nambu};
use nambu3_core::cochain::{theorem1_report, SampleOptions};
use nambu3_core::cubic::{Direction, Matrix3};
use nambu3_core::liealg::build_gl;
use nambu3_core::rng::{gen_random_cubic, Stream};
use nambu3_core::scalar::FloatScalar;

fn draws(order: usize, count: usize) -> Vec<Matrix3<FloatScalar>> {
    let mut stream = Stream::new(42);
    (0..count)
        .map(|_| gen_random_cubic::<FloatScalar>(order, &mut stream, 3).unwrap())
        .collect()
}

fn bench_mul_dir(c: &mut Criterion) {
    let mut group = c.benchmark_group("mul_dir");
    for order in [2usize, 4, 8] {
        let m = draws(order, 2);
        group.bench_with_input(BenchmarkId::new("j", order), &order, |b, _| {
            b.iter(|| mul_dir(&m[0], &m[1], Direction::J).unwrap())
        });
    }
    group.finish();
}

fn bench_quantum_nambu(c: &mut Criterion) {
    let mut group = c.benchmark_group("quantum_nambu");
    for order in [2usize, 4, 8] {
        let m = draws(order, 3);
        group.bench_with_input(BenchmarkId::from_parameter(order), &order, |b, _| {
            b.iter(|| quantum_nambu(&m[0], &m[1], &m[2]).unwrap())
        });
    }
    group.finish();
}

fn bench_fi_residual(c: &mut Criterion) {
    let mut group = c.benchmark_group("fi_residual");
    for order in [2usize, 4] {
        let m = draws(order, 5);
        group.bench_with_input(BenchmarkId::from_parameter(order), &order, |b, _| {
            b.iter(|| fi_residual_matrix_cubic(&m[0], &m[1], &m[2], &m[3], &m[4]).unwrap())
        });
    }
    group.finish();
}

fn bench_induced_bracket_report(c: &mut Criterion) {
    let (g, omega) = build_gl::<FloatScalar>(2).unwrap();
    let opts = SampleOptions::float(42, 200);
    c.bench_function("induced_bracket_report_gl2", |b| {
        b.iter(|| theorem1_report(&g, &omega, &opts).unwrap())
    });
}

criterion_group!(
    kernels,
    bench_mul_dir,
    bench_quantum_nambu,
    bench_fi_residual,
    bench_induced_bracket_report
);
criterion_main!(kernels);
