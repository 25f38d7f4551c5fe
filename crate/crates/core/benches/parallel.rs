use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dilogkit::expansion::{arcsin_series, convolve_with};
use dilogkit::identities::{dense_grid, euler_sum_with, register_all, EulerSumSpec};
use dilogkit::special::li2;
use dilogkit::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn suite(c: &mut Criterion) {
    let reg = register_all();
    let mut group = c.benchmark_group("verify_all");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| reg.run_with(None, exec).unwrap()));
    }
    group.finish();
}

fn convolution(c: &mut Criterion) {
    let mut group = c.benchmark_group("convolve");
    for order in [400usize, 2000] {
        let a = arcsin_series(1, order).unwrap();
        let b = arcsin_series(2, order).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, order), &order, |bench, _| {
                bench.iter(|| convolve_with(black_box(&a), black_box(&b), exec))
            });
        }
    }
    group.finish();
}

fn tabulate(c: &mut Criterion) {
    let grid = dense_grid();
    let mut group = c.benchmark_group("li2_dense_grid");
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| exec.map(black_box(&grid), |&t| li2(t).unwrap()))
        });
    }
    group.finish();
}

fn long_sum(c: &mut Criterion) {
    let spec = EulerSumSpec::custom(
        "1/n^4",
        |n| {
            let x = n as f64;
            1.0 / (x * x * x * x)
        },
        10_000_000,
        std::f64::consts::PI.powi(4) / 90.0,
    );
    let mut group = c.benchmark_group("sum_1e7_terms");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| euler_sum_with(black_box(&spec), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, suite, convolution, tabulate, long_sum);
criterion_main!(benches);
