//! Criterion benchmarks for the hot paths: subset enumeration (bigraded
//! Betti numbers), ring construction with all products, and exact Smith
//! normal form on random sparse boundary-like matrices.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use macx_core::graded_ring::{algebra_from_hochster, fingerprint};
use macx_core::homology::Coeff;
use macx_core::linalg::{smith_normal_form, IntMatrix, Rationals};
use macx_core::moment_angle::{bigraded_betti, hochster_ring};
use macx_core::zoo::zoo_complex;

fn bench_bigraded(c: &mut Criterion) {
    let mut group = c.benchmark_group("bigraded_betti");
    for name in ["polygon(6)", "polygon(8)", "O6", "C8"] {
        let k = zoo_complex(name).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &k, |b, k| {
            b.iter(|| bigraded_betti(k, Coeff::Integers))
        });
    }
    group.finish();
}

fn bench_ring(c: &mut Criterion) {
    let mut group = c.benchmark_group("hochster_ring_fingerprint");
    group.sample_size(10);
    for name in ["polygon(6)", "O6", "bipyramid(7)"] {
        let k = zoo_complex(name).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &k, |b, k| {
            b.iter(|| {
                let ring = hochster_ring(Rationals, k);
                fingerprint(&algebra_from_hochster(&ring))
            })
        });
    }
    group.finish();
}

fn bench_snf(c: &mut Criterion) {
    // deterministic sparse integer matrix via xorshift
    let mut seed = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        seed
    };
    let (rows, cols) = (40usize, 60usize);
    let mut entries = vec![vec![0i64; cols]; rows];
    for row in entries.iter_mut() {
        for e in row.iter_mut() {
            let r = next();
            if r % 5 == 0 {
                *e = (r % 7) as i64 - 3;
            }
        }
    }
    c.bench_function("smith_normal_form_40x60", |b| {
        b.iter(|| {
            let m = IntMatrix::from_rows(&entries);
            smith_normal_form(&m)
        })
    });
}

criterion_group!(benches, bench_bigraded, bench_ring, bench_snf);
criterion_main!(benches);
