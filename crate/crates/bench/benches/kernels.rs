//! Performance of the exact kernels: fraction-free elimination, Kronecker
//! products, boundary assembly, and the operator equation checks.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use homtwist::families::{heisenberg, sl2, sl_n};
use homtwist::homology::{build_ce_complex, HomModule};
use homtwist::hybe::{braid_operators, build_b_alpha, check_braid_relations, check_hybe};
use homtwist::{HomAlgebra, Rational};
use homtwist_bench::{pseudo_random_matrix, pseudo_random_singular};

fn bench_elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("bareiss");
    for size in [8usize, 16, 24] {
        let full = pseudo_random_matrix(size, size, 0xC0FFEE + size as u64);
        group.bench_with_input(BenchmarkId::new("rank_dense", size), &full, |b, m| {
            b.iter(|| m.rank())
        });
        let singular = pseudo_random_singular(size, size + 4, 0xBEEF + size as u64);
        group.bench_with_input(BenchmarkId::new("kernel", size), &singular, |b, m| {
            b.iter(|| m.kernel())
        });
    }
    group.finish();
}

fn bench_kronecker(c: &mut Criterion) {
    let a = pseudo_random_matrix(8, 8, 11);
    let b = pseudo_random_matrix(8, 8, 13);
    c.bench_function("kronecker_8x8", |bench| bench.iter(|| a.kronecker(&b)));
}

fn bench_ce_assembly(c: &mut Criterion) {
    let mut group = c.benchmark_group("ce_complex");
    group.sample_size(10);

    let (alg, alpha) = sl2(&Rational::integer(2)).unwrap();
    let l = HomAlgebra::twist(&alg, &alpha).unwrap();
    group.bench_function("sl2_adjoint_full", |b| {
        b.iter(|| build_ce_complex(&l, &HomModule::adjoint(&l), 3).unwrap())
    });

    let (alg, alpha) = sl_n(3, &[Rational::integer(2), Rational::integer(3)]).unwrap();
    let l3 = HomAlgebra::twist(&alg, &alpha).unwrap();
    group.bench_function("sl3_adjoint_assembly_and_d2", |b| {
        b.iter(|| {
            let c = build_ce_complex(&l3, &HomModule::adjoint(&l3), 8).unwrap();
            assert!(c.verify_d_squared());
        })
    });
    group.finish();
}

fn bench_operators(c: &mut Criterion) {
    let mut group = c.benchmark_group("yang_baxter");
    let (alg, alpha) = heisenberg(&Rational::integer(2), &Rational::integer(3)).unwrap();
    let l = HomAlgebra::twist(&alg, &alpha).unwrap();
    let b_op = build_b_alpha(&l).unwrap();
    group.bench_function("check_hybe_16", |b| {
        b.iter(|| assert!(check_hybe(&b_op).unwrap()))
    });
    group.sample_size(10);
    group.bench_function("braid_relations_64", |b| {
        b.iter(|| {
            let ops = braid_operators(&b_op, 3).unwrap();
            assert!(check_braid_relations(&ops).unwrap());
        })
    });
    group.finish();
}

criterion_group!(
    kernels,
    bench_elimination,
    bench_kronecker,
    bench_ce_assembly,
    bench_operators
);
criterion_main!(kernels);
