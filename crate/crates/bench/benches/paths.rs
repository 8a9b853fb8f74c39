use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use platsurf::{count_allowable, enumerate_allowable};
use platsurf_bench::fixture;

fn counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_allowable");
    for (n, m) in [(10, 9), (50, 49), (100, 99)] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{n}x{m}")), &(n, m), |b, &(n, m)| {
            b.iter(|| count_allowable(black_box(n), black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let d = fixture(6, 9);
    c.bench_function("enumerate_allowable/6x9", |b| b.iter(|| enumerate_allowable(black_box(&d))));
}

criterion_group!(benches, counting, enumeration);
criterion_main!(benches);
