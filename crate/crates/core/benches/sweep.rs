use criterion::{criterion_group, criterion_main, Criterion};
use qpfd::registry::{select, Env, Grid, Mode};
use qpfd::sweep::{plan, run_parallel, run_sequential};
use qpfd::Rational;
use std::hint::black_box;

fn sweeps(c: &mut Criterion) {
    let grid = Grid {
        n_max: Some(4),
        m_max: Some(2),
        trials: Some(2),
        ..Grid::default()
    };
    let tasks = plan(&select("all").unwrap(), &grid);
    for (label, mode) in [
        ("symbolic", Mode::SymbolicQ),
        ("numeric", Mode::NumericQ(Rational::frac(5, 2))),
    ] {
        let env = Env::new(&mode).unwrap();
        let mut g = c.benchmark_group(format!("catalog_sweep_{label}"));
        g.sample_size(10);
        g.bench_function("sequential", |b| {
            b.iter(|| black_box(run_sequential(&env, &grid, &tasks, None)))
        });
        g.bench_function("parallel", |b| {
            b.iter(|| black_box(run_parallel(&env, &grid, &tasks, None, 0)))
        });
        g.finish();
    }
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
