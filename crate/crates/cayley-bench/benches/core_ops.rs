//! Benchmarks for the computations that dominate the verification suite:
//! fraction-free elimination, Jordan eigenspace kernels, the Grassmannian
//! round trip, and the weight-table sweeps.

use cayley_core::f4::table::verify_table;
use cayley_core::f4::wsub::{base_line, base_two_plane, p34};
use cayley_core::jordan::{chi, chi_inv, eigenspace_decomposition, sample_chart_point};
use cayley_core::linalg::{kernel, nilorder, rank, Matrix};
use cayley_core::orbit::rho_x34;
use cayley_core::scalar::{rat, Rational};
use criterion::{criterion_group, criterion_main, Criterion};
use rand::{Rng, SeedableRng};
use std::hint::black_box;

fn random_matrix(rows: usize, cols: usize, seed: u64) -> Matrix<Rational> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    Matrix::from_fn(rows, cols, |_, _| {
        rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
    })
}

fn bench_linalg(c: &mut Criterion) {
    let m = random_matrix(20, 20, 1);
    c.bench_function("rank 20x20 rational", |b| {
        b.iter(|| black_box(rank(black_box(&m))))
    });
    let wide = random_matrix(20, 40, 2);
    c.bench_function("kernel 20x40 rational", |b| {
        b.iter(|| black_box(kernel(black_box(&wide))))
    });
}

fn bench_jordan(c: &mut Criterion) {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let p = sample_chart_point(&mut rng);
    c.bench_function("eigenspace decomposition", |b| {
        b.iter(|| black_box(eigenspace_decomposition(black_box(&p)).unwrap()))
    });
    let v = chi(&p).unwrap();
    c.bench_function("chi round trip", |b| {
        b.iter(|| {
            let q = chi_inv(black_box(&v)).unwrap();
            black_box(q)
        })
    });
}

fn bench_f4(c: &mut Criterion) {
    c.bench_function("weight table sweep", |b| {
        b.iter(|| black_box(verify_table()))
    });
    let ell = base_line();
    let plane = base_two_plane();
    c.bench_function("p34 projection", |b| {
        b.iter(|| black_box(p34(black_box(&ell), black_box(&plane)).unwrap()))
    });
}

fn bench_orbit(c: &mut Criterion) {
    let op = rho_x34();
    c.bench_function("nilorder of the long chain operator", |b| {
        b.iter(|| black_box(nilorder(black_box(op.matrix()), 26)))
    });
}

criterion_group!(benches, bench_linalg, bench_jordan, bench_f4, bench_orbit);
criterion_main!(benches);
