//! Elimination throughput. Run once with default features and once with
//! `--no-default-features`; benchmark ids carry the backend name so the two
//! runs line up in criterion's reports.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use braidq::complexes::boundary_matrix;
use braidq::exactla::{smith_normal_form_with, PivotRule, PolyRing, Transforms};
use braidq::homology::{compute_homology_with, compute_table, Method};
use braidq::parallel;
use braidq::qarith::coeff::Fp;
use braidq::qarith::CoeffRing;

fn backend() -> &'static str {
    if parallel::enabled() {
        "parallel"
    } else {
        "sequential"
    }
}

fn local_route(c: &mut Criterion) {
    let mut g = c.benchmark_group("local_route");
    g.sample_size(10);
    for (coeff, n) in [
        (CoeffRing::Rationals, 9),
        (CoeffRing::PrimeField(2), 10),
        (CoeffRing::PrimeField(3), 10),
    ] {
        g.bench_with_input(
            BenchmarkId::new(format!("{backend}/{coeff}", backend = backend()), n),
            &n,
            |b, &n| b.iter(|| compute_homology_with(black_box(n), coeff, Method::Local).unwrap()),
        );
    }
    g.finish();
}

fn global_route(c: &mut Criterion) {
    let mut g = c.benchmark_group("global_route");
    g.sample_size(10);
    for (coeff, n) in [(CoeffRing::Rationals, 8), (CoeffRing::PrimeField(3), 9)] {
        g.bench_with_input(
            BenchmarkId::new(format!("{}/{coeff}", backend()), n),
            &n,
            |b, &n| b.iter(|| compute_homology_with(black_box(n), coeff, Method::Global).unwrap()),
        );
    }
    g.finish();
}

fn smith_fp(c: &mut Criterion) {
    let mut g = c.benchmark_group("smith_fp_q");
    g.sample_size(10);
    let p = 2;
    let ring = PolyRing::new(Fp::new(p));
    let m = boundary_matrix(10, 5, CoeffRing::PrimeField(p))
        .map(|x| x.to_fp_vec())
        .to_dense(Vec::new());
    for pivot in [PivotRule::MinNorm, PivotRule::MinNormMarkowitz] {
        g.bench_function(format!("{}/{pivot:?}/n10k5", backend()), |b| {
            b.iter(|| smith_normal_form_with(&ring, black_box(&m), Transforms::NONE, pivot))
        });
    }
    g.finish();
}

fn table(c: &mut Criterion) {
    let mut g = c.benchmark_group("table");
    g.sample_size(10);
    g.bench_function(format!("{}/fp:2/nmax10", backend()), |b| {
        b.iter(|| compute_table(CoeffRing::PrimeField(2), black_box(10)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, local_route, global_route, smith_fp, table);
criterion_main!(benches);
