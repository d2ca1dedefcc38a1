use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ultra_lpa_core::algebra::{CycleCorner, DEFAULT_LAMBDA_CAP};
use ultra_lpa_core::classify::{trichotomy, Caps};
use ultra_lpa_core::paths::enumerate_cycles;
use ultra_lpa_core::random::random_element;
use ultra_lpa_core::{fixtures, LeavittAlgebra};

fn classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("trichotomy");
    for (name, ug) in fixtures::all() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &ug, |b, ug| {
            b.iter(|| trichotomy(black_box(ug), Caps::default()).unwrap())
        });
    }
    group.finish();
}

fn arithmetic(c: &mut Criterion) {
    let mut group = c.benchmark_group("algebra");
    for name in ["ug-mix", "ug-split", "ug-rose2"] {
        let ug = fixtures::all().into_iter().find(|(n, _)| *n == name).unwrap().1;
        let alg = LeavittAlgebra::new(&ug);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let xs: Vec<_> = (0..16).map(|_| random_element(&mut rng, &ug, 4, 3)).collect();
        group.bench_function(BenchmarkId::new("canonicalize", name), |b| {
            b.iter(|| xs.iter().map(|x| alg.canonicalize(black_box(x)).len()).sum::<usize>())
        });
        group.bench_function(BenchmarkId::new("mul", name), |b| {
            b.iter(|| xs.windows(2).map(|w| alg.mul(&w[0], &w[1]).len()).sum::<usize>())
        });
    }
    group.finish();
}

fn corner(c: &mut Criterion) {
    let mut group = c.benchmark_group("to_matrix");
    for name in ["ug-tail", "ug-split", "ug-cycle2"] {
        let ug = fixtures::all().into_iter().find(|(n, _)| *n == name).unwrap().1;
        let alg = LeavittAlgebra::new(&ug);
        let corner = CycleCorner::new(&ug, enumerate_cycles(&ug).remove(0), DEFAULT_LAMBDA_CAP).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let xs: Vec<_> = (0..16).map(|_| alg.canonicalize(&random_element(&mut rng, &ug, 4, 3))).collect();
        group.bench_function(name, |b| {
            b.iter(|| xs.iter().map(|x| corner.to_matrix(&alg, black_box(x)).unwrap().dim()).sum::<usize>())
        });
    }
    group.finish();
}

criterion_group!(benches, classify, arithmetic, corner);
criterion_main!(benches);
