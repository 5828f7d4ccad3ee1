use criterion::{black_box, criterion_group, criterion_main, Criterion};
use intercept_core::lemmas;
use intercept_core::planar::interception;
use intercept_core::quad::integrate;
use intercept_core::spherical::interception as sph;
use std::f64::consts::FRAC_PI_2;

fn bench_quadrature(c: &mut Criterion) {
    c.bench_function("quadrature sqrt(cos) to 1e-12", |b| {
        b.iter(|| {
            integrate(
                |s| s.cos().sqrt() / 2.0,
                black_box(0.0),
                black_box(FRAC_PI_2),
                1e-12,
            )
            .unwrap()
            .value
        })
    });
}

fn bench_constants(c: &mut Criterion) {
    c.bench_function("lemniscate constants three routes", |b| {
        b.iter(|| intercept_core::lemniscate_constants().unwrap().b_squared)
    });
}

fn bench_planar_state(c: &mut Criterion) {
    c.bench_function("planar state_at(1)", |b| {
        b.iter(|| interception::state_at(black_box(1.0)).unwrap().x)
    });
    c.bench_function("planar gap limit extrapolation", |b| {
        b.iter(|| interception::limit_pq().unwrap().value)
    });
}

fn bench_spherical(c: &mut Criterion) {
    c.bench_function("spherical triangle elements at 1", |b| {
        b.iter(|| sph::triangle_elements_sph(black_box(1.0)).unwrap().ang_qpt)
    });
}

fn bench_lemmas(c: &mut Criterion) {
    c.bench_function("planar lemma Monte-Carlo x100", |b| {
        b.iter(|| lemmas::monte_carlo_lemma3(black_box(7), 100).unwrap())
    });
}

criterion_group!(
    benches,
    bench_quadrature,
    bench_constants,
    bench_planar_state,
    bench_spherical,
    bench_lemmas
);
criterion_main!(benches);
