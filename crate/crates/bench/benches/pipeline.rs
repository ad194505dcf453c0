use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use zgkh::pieces::{decompose, lambda_bounds, staircase, u_g};
use zgkh::tqft::{build_reduced_complex, CubeOptions};
use zgkh::zigzag::{fg_certificate, zz, Rational};
use zgkh_bench::{diagrams, reduced};

fn cube(c: &mut Criterion) {
    let mut g = c.benchmark_group("cube");
    for (name, pd) in diagrams() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &pd, |b, pd| {
            b.iter(|| build_reduced_complex(black_box(pd), CubeOptions::default()).unwrap())
        });
    }
    g.finish();
}

fn pieces(c: &mut Criterion) {
    let mut g = c.benchmark_group("pieces");
    for (name, pd) in diagrams() {
        let cx = reduced(&pd);
        g.bench_with_input(BenchmarkId::new("decompose", name), &cx, |b, cx| b.iter(|| decompose(black_box(cx))));
        g.bench_with_input(BenchmarkId::new("lambda", name), &cx, |b, cx| b.iter(|| lambda_bounds(black_box(cx))));
    }
    for n in [2, 4, 6] {
        let s = staircase(n);
        g.bench_with_input(BenchmarkId::new("u_g_staircase", n), &s, |b, s| b.iter(|| u_g(black_box(s))));
    }
    g.finish();
}

fn zigzag(c: &mut Criterion) {
    let mut g = c.benchmark_group("zigzag");
    for (p, q) in [(3, 7), (13, 17), (21, 29)] {
        let x = Rational::new(p, q).unwrap();
        g.bench_with_input(BenchmarkId::new("zz", format!("{p}_{q}")), &x, |b, x| {
            b.iter(|| zz(black_box(*x)).unwrap())
        });
    }
    for (p, q) in [(3, 7), (7, 11)] {
        let x = Rational::new(p, q).unwrap();
        g.bench_with_input(BenchmarkId::new("fg_certificate", format!("{p}_{q}")), &x, |b, x| {
            b.iter(|| fg_certificate(black_box(*x)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, cube, pieces, zigzag);
criterion_main!(benches);
