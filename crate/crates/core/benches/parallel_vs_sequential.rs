use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use insat_core::enumeration::exhaust_labeled;
use insat_core::{named, verify_pn_is_with, Execution, LabeledGn};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_pn_is");
    for n in [8, 10, 12] {
        let g = LabeledGn::build(n).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                b.iter(|| verify_pn_is_with(g, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_exhaust(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaust_labeled_p4");
    group.sample_size(10);
    let p4 = named::path(4).unwrap();
    for order in [5, 6] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, order), &order, |b, &order| {
                b.iter(|| exhaust_labeled(order, &p4, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_verify, bench_exhaust);
criterion_main!(benches);
