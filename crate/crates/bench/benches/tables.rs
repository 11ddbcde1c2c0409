use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use formring::pairs::{form_to_raw_pair, fixed_sequence_report};
use formring::random;
use formring::{
    build_module, build_ring, check_tables, form_to_pair, is_gorenstein, reconstruct_from_coefficients,
    validate_pair, Integers,
};

fn tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("tables");
    for n in [3usize, 5, 8] {
        let f = random::form(&mut random::rng(n as u64), n, 100);
        g.bench_with_input(BenchmarkId::new("build_ring", n), &f, |b, f| b.iter(|| build_ring(black_box(f))));
        g.bench_with_input(BenchmarkId::new("build_module", n), &f, |b, f| {
            b.iter(|| build_module(black_box(f), 1).unwrap())
        });
    }
    let f = random::form_nonzero_at(&mut random::rng(1), 5, 100, &[0]);
    g.bench_function("theta_check/5", |b| b.iter(|| check_tables(black_box(&f)).unwrap()));
    let f = random::primitive_form(&mut random::rng(2), 5, 20);
    g.bench_function("gorenstein/5", |b| b.iter(|| is_gorenstein(black_box(&f)).unwrap()));
    g.finish();
}

fn pairs(c: &mut Criterion) {
    let mut g = c.benchmark_group("pairs");
    for n in [3usize, 5, 8] {
        let f = random::form(&mut random::rng(10 + n as u64), n, 100);
        g.bench_with_input(BenchmarkId::new("form_to_pair", n), &f, |b, f| {
            b.iter(|| form_to_pair(black_box(f)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("reconstruct", n), f.coeffs(), |b, a| {
            b.iter(|| reconstruct_from_coefficients(&Integers, black_box(a)).unwrap())
        });
        let p = form_to_raw_pair(&f).unwrap();
        g.bench_with_input(BenchmarkId::new("validate", n), &p, |b, p| {
            b.iter(|| validate_pair(black_box(p)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("fixed_sequence", n), &n, |b, &n| {
            b.iter(|| fixed_sequence_report(black_box(n)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, tables, pairs);
criterion_main!(benches);
