use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pade_bench::{demo_problem, demo_problem_f64};
use pade_core::{Algorithm, Side, UniAlgorithm};

fn univariate(c: &mut Criterion) {
    let p = demo_problem();
    let mut group = c.benchmark_group("univariate");
    for n in [5usize, 10] {
        for (name, algo) in [
            ("general", UniAlgorithm::General),
            ("explicit", UniAlgorithm::ExplicitParams),
            ("ratios", UniAlgorithm::CoefficientRatios),
        ] {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| p.univariate_polys(n, algo).unwrap())
            });
        }
    }
    group.finish();
}

fn bivariate(c: &mut Criterion) {
    let p = demo_problem();
    let pf = demo_problem_f64();
    let mut group = c.benchmark_group("estimate_c01");
    group.sample_size(20);
    for n in [4usize, 8] {
        for side in [Side::Left, Side::Right] {
            for algo in [Algorithm::General, Algorithm::Refined] {
                let id = format!("{side:?}/{algo:?}").to_lowercase();
                group.bench_with_input(BenchmarkId::new(format!("exact/{id}"), n), &n, |b, &n| {
                    b.iter(|| p.estimate_c01(n, side, algo).unwrap())
                });
                group.bench_with_input(BenchmarkId::new(format!("float/{id}"), n), &n, |b, &n| {
                    b.iter(|| pf.estimate_c01(n, side, algo).unwrap())
                });
            }
        }
    }
    group.finish();
}

criterion_group!(benches, univariate, bivariate);
criterion_main!(benches);
