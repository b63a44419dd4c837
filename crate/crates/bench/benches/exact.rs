use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use latscale::lattice::{LatticeKind, LatticePoint};
use latscale::transform::{scheme_tower, SchemeK};
use latscale::{
    grid_coincidence_check, induced_map, search, DirectionalScaling, KForm, Rational, SearchSpec,
    TowerElement,
};

fn sample_element(k: i64, seed: i64) -> TowerElement {
    let t = scheme_tower(LatticeKind::Square, SchemeK::integer(k)).unwrap();
    let coeffs = (0..t.dim() as i64)
        .map(|j| Rational::new((seed * 31 + j * 17 - 40).into(), (j + 3).into()))
        .collect();
    t.element(coeffs).unwrap()
}

fn tower_arith(c: &mut Criterion) {
    let mut g = c.benchmark_group("tower");
    for k in [2, 1000] {
        let a = sample_element(k, 1);
        let b = sample_element(k, 2);
        g.bench_with_input(BenchmarkId::new("mul", k), &(&a, &b), |bench, (a, b)| {
            bench.iter(|| black_box(*a) * black_box(*b))
        });
        g.bench_with_input(BenchmarkId::new("inv", k), &a, |bench, a| {
            bench.iter(|| black_box(a).inv().unwrap())
        });
    }
    g.finish();
}

fn transform(c: &mut Criterion) {
    let ds = DirectionalScaling::square_family(2).unwrap();
    let p = LatticePoint::new(834, -735, LatticeKind::Square);
    c.bench_function("apply_exact/square_k2", |b| {
        b.iter(|| ds.apply_exact(black_box(&p)).unwrap())
    });
    c.bench_function("apply_float/square_k2", |b| {
        b.iter(|| ds.apply_float(black_box((834.0, -735.0))))
    });
}

fn symmetry(c: &mut Criterion) {
    let mut g = c.benchmark_group("symmetry");
    for (name, ds) in [
        ("square_k2", DirectionalScaling::square_family(2).unwrap()),
        ("triangular", DirectionalScaling::triangular_known()),
    ] {
        g.bench_function(BenchmarkId::new("induced_map", name), |b| {
            b.iter(|| induced_map(black_box(&ds)).unwrap())
        });
        let im = induced_map(&ds).unwrap();
        g.bench_function(BenchmarkId::new("grid_radius_20", name), |b| {
            b.iter(|| grid_coincidence_check(&ds, &im, 20).unwrap())
        });
    }
    let spec = SearchSpec {
        kind: LatticeKind::Triangular,
        form: KForm::SqrtThreeMultiples { min: 1, max: 6 },
        grid_radius: 5,
    };
    g.sample_size(20);
    g.bench_function("search/triangular_sqrt3_1..6", |b| {
        b.iter(|| search(black_box(&spec)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, tower_arith, transform, symmetry);
criterion_main!(benches);
