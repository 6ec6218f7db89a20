use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use leibniz_bench::{algebras, top_differential};
use leibniz_core::exactla::rank;
use leibniz_core::homology::{ce_chain, conjecture_check, loday_chain, Coefficients};

fn ranks(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    for (name, g) in algebras() {
        let d = top_differential(&g, 3);
        group.bench_with_input(
            BenchmarkId::new(name, format!("{}x{}", d.rows(), d.cols())),
            &d,
            |b, d| b.iter(|| rank(black_box(d))),
        );
    }
    group.finish();
}

fn complexes(c: &mut Criterion) {
    let mut group = c.benchmark_group("complex");
    group.sample_size(10);
    for (name, g) in algebras() {
        group.bench_with_input(BenchmarkId::new("loday_chain", &name), &g, |b, g| {
            b.iter(|| {
                loday_chain(black_box(g), &Coefficients::Trivial, 3)
                    .unwrap()
                    .betti()
            })
        });
        group.bench_with_input(BenchmarkId::new("ce_chain", &name), &g, |b, g| {
            b.iter(|| {
                ce_chain(black_box(g), &Coefficients::Trivial, 3)
                    .unwrap()
                    .betti()
            })
        });
    }
    group.finish();
}

fn conjecture(c: &mut Criterion) {
    let mut group = c.benchmark_group("conjecture_check");
    group.sample_size(10);
    for (d, w) in [(1, 6), (2, 4), (2, 5)] {
        group.bench_function(format!("d{d}_w{w}"), |b| {
            b.iter(|| conjecture_check(black_box(d), black_box(w)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, ranks, complexes, conjecture);
criterion_main!(benches);
