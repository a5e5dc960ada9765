use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qpfd::pfd::{decompose_closed_form, decompose_oracle, random_instance};
use std::hint::black_box;

fn engines(c: &mut Criterion) {
    let mut g = c.benchmark_group("pfd_engines");
    for (s, m) in [(2, 2), (3, 3), (4, 2), (4, 3), (6, 3)] {
        let (q, spec) = random_instance(1, s, m, 0);
        assert_eq!(
            decompose_closed_form(&q, &spec).unwrap(),
            decompose_oracle(&q, &spec).unwrap()
        );
        let id = format!("s{s}_m{m}");
        g.bench_with_input(BenchmarkId::new("closed_form", &id), &(&q, &spec), |b, (q, spec)| {
            b.iter(|| black_box(decompose_closed_form(q, spec).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("oracle", &id), &(&q, &spec), |b, (q, spec)| {
            b.iter(|| black_box(decompose_oracle(q, spec).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, engines);
criterion_main!(benches);
