//! Parallel vs sequential comparison for the data-parallel hot paths:
//! the randomized identity scan, the Sturm-bisection eigensolve, and the
//! paired h / h·2 solve used by Richardson extrapolation.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use susy_extend::domain::{ExtensionParams, GridSpec, MorseParams};
use susy_extend::numerics::{build_hamiltonian, eigen_lowest, eigen_lowest_seq};
use susy_extend::susy::{partner_potential, shape_invariance_residual, Branch, SuperpotentialSpec};
use susy_extend::{par, potentials};

fn spec() -> SuperpotentialSpec {
    SuperpotentialSpec::new(
        MorseParams::new(3.5, 1.0).unwrap(),
        ExtensionParams::new(0.4, 2.0).unwrap(),
    )
}

fn identity_samples(n: usize) -> Vec<(SuperpotentialSpec, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    (0..n)
        .map(|_| {
            let a = rng.gen_range(0.5..6.0);
            let b = rng.gen_range(0.1..5.0);
            let p = rng.gen_range(-3.0..3.0);
            let q_big: f64 = rng.gen_range(0.01..10.0);
            let s = SuperpotentialSpec::new(
                MorseParams::new(a, b).unwrap(),
                ExtensionParams::new(p, q_big).unwrap(),
            );
            (s, 0.5 * q_big.ln() + rng.gen_range(-15.0..15.0))
        })
        .collect()
}

fn bench_identity_scan(c: &mut Criterion) {
    let samples = identity_samples(100_000);
    let scan_residual = |i: usize| {
        let (s, x) = &samples[i];
        shape_invariance_residual(*x, s)
            .abs()
            .max((potentials::v_morse_ext(*x, s) - partner_potential(*x, s, Branch::Plus)).abs())
    };
    let mut group = c.benchmark_group("identity_scan");
    group.bench_with_input(BenchmarkId::new("parallel", samples.len()), &(), |b, _| {
        b.iter(|| par::max_of(samples.len(), scan_residual))
    });
    group.bench_with_input(BenchmarkId::new("sequential", samples.len()), &(), |b, _| {
        b.iter(|| par::max_of_seq(samples.len(), scan_residual))
    });
    group.finish();
}

fn bench_eigensolve(c: &mut Criterion) {
    let s = spec();
    let grid = GridSpec::new(-8.0, 20.0, 20_001).unwrap();
    let v = grid
        .sample(|x| partner_potential(x, &s, Branch::Plus))
        .unwrap();
    let (diag, off) = build_hamiltonian(&v);
    let mut group = c.benchmark_group("eigen_lowest_k4");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| eigen_lowest(&diag, &off, 4).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| eigen_lowest_seq(&diag, &off, 4).unwrap())
    });
    group.finish();
}

fn bench_paired_grids(c: &mut Criterion) {
    let s = spec();
    let solve_at = |count: usize| {
        let grid = GridSpec::new(-8.0, 20.0, count).unwrap();
        let v = grid
            .sample(|x| partner_potential(x, &s, Branch::Plus))
            .unwrap();
        let (diag, off) = build_hamiltonian(&v);
        eigen_lowest_seq(&diag, &off, 4).unwrap()
    };
    let mut group = c.benchmark_group("paired_h_h2_solve");
    group.sample_size(10);
    group.bench_function("joined", |b| {
        b.iter(|| par::join(|| solve_at(7001), || solve_at(14_001)))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| (solve_at(7001), solve_at(14_001)))
    });
    group.finish();
}

criterion_group!(benches, bench_identity_scan, bench_eigensolve, bench_paired_grids);
criterion_main!(benches);
