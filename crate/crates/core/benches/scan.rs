use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use extremal_core::prime_scan::scan_with;
use extremal_core::sympow::smoothed_sum_with;
use extremal_core::{CurveQ, Execution};

fn modes() -> Vec<(&'static str, Execution)> {
    let mut v = vec![("sequential", Execution::Sequential)];
    if Execution::parallel_available() {
        v.push(("parallel", Execution::Parallel));
    }
    v
}

fn bench_scan(c: &mut Criterion) {
    let e = CurveQ::new(1, 1).unwrap();
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    for hi in [200_000u64, 1_000_000] {
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, hi), &hi, |b, &hi| {
                b.iter(|| scan_with(&e, 2, black_box(hi), false, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_smoothed_sum(c: &mut Criterion) {
    let e = CurveQ::new(-1, 0).unwrap();
    let mut group = c.benchmark_group("smoothed_sum_n2");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| smoothed_sum_with(&e, 2, black_box(1e5), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_scan, bench_smoothed_sum);
criterion_main!(benches);
