//! Benchmarks the data-parallel sweep against the sequential reference
//! path, plus the quadrature kernel on a representative radial integral.
//! Run with `cargo bench -p renyic`; disable the rayon path entirely with
//! `--no-default-features` to compare the fallback build.

use criterion::{criterion_group, criterion_main, Criterion};

use renyic::complexity::{complexity, renyi};
use renyic::order::OrderParam;
use renyic::quadrature::QuadratureSpec;
use renyic::quantum::{hydrogen_density, HydrogenState, Space};
use renyic::sweep::{figure_rows, figure_rows_seq, FigureId};

fn bench_sweep(c: &mut Criterion) {
    // Loose tolerance keeps per-iteration cost sane; relative speedup is
    // what matters here.
    let spec = QuadratureSpec {
        rel_tol: 1e-7,
        ..QuadratureSpec::default()
    };
    let mut group = c.benchmark_group("figure-sweep-fig1b");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| figure_rows(FigureId::Fig1b, &spec).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| figure_rows_seq(FigureId::Fig1b, &spec).unwrap())
    });
    group.finish();
}

fn bench_single_state(c: &mut Criterion) {
    let spec = QuadratureSpec::default();
    let density =
        hydrogen_density(&HydrogenState::new(15, 10, 5, Space::Position).unwrap()).unwrap();
    c.bench_function("renyi-hydrogen-15-10-5-alpha2", |b| {
        b.iter(|| renyi(&density, OrderParam::Finite(2.0), &spec).unwrap())
    });
    c.bench_function("complexity-hydrogen-1s-2-inf", |b| {
        let d = hydrogen_density(&HydrogenState::new(1, 0, 0, Space::Position).unwrap()).unwrap();
        b.iter(|| complexity(&d, OrderParam::Finite(2.0), OrderParam::InfinityLimit, &spec).unwrap())
    });
}

criterion_group!(benches, bench_sweep, bench_single_state);
criterion_main!(benches);
