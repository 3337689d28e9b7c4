use ade_stringy::{sweep, sweep_sequential, Family, SingularitySpec};
use criterion::{criterion_group, criterion_main, Criterion};

fn grid() -> Vec<SingularitySpec> {
    let mut specs = Vec::new();
    for m in 3..=10 {
        for n in 1..=20 {
            specs.push(SingularitySpec::new(Family::A, n, m).unwrap());
        }
        for n in 4..=20 {
            specs.push(SingularitySpec::new(Family::D, n, m).unwrap());
        }
        for (f, n) in [(Family::E6, 6), (Family::E7, 7), (Family::E8, 8)] {
            specs.push(SingularitySpec::new(f, n, m).unwrap());
        }
    }
    specs
}

fn bench_sweep(c: &mut Criterion) {
    let specs = grid();
    let mut group = c.benchmark_group("full-grid");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| sweep(&specs).unwrap()));
    group.bench_function("sequential", |b| b.iter(|| sweep_sequential(&specs).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_sweep);
criterion_main!(benches);
