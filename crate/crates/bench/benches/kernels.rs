use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use quadric_core::cone::rho_tilde;
use quadric_core::forms::q_form;
use quadric_core::lie::basis;
use quadric_core::moment::orbit_matrix;
use quadric_core::shapovalov::shapovalov_expand;
use quadric_core::{Poly, WeylOp};

fn weyl_product(c: &mut Criterion) {
    let k = 3;
    let lap = WeylOp::laplacian(k);
    let e = WeylOp::euler(2 * k);
    let a = &(&e * &lap) + &WeylOp::mult(&q_form(k));
    c.bench_function("weyl_mul_k3", |b| b.iter(|| black_box(&a) * black_box(&a)));
}

fn reduction(c: &mut Criterion) {
    let k = 3;
    let q = q_form(k);
    let p = (&(&Poly::var(6, 0) + &Poly::var(6, 5)) + &Poly::var(6, 2)).pow(8);
    c.bench_function("reduce_mod_q_deg8_k3", |b| b.iter(|| black_box(&p).reduce(&q)));
}

fn cone_bracket(c: &mut Criterion) {
    let b3 = basis(3);
    let ops: Vec<_> = b3.iter().map(|(_, xi)| rho_tilde(xi)).collect();
    c.bench_function("cone_commutator_k3", |b| {
        b.iter(|| black_box(&ops[7]).commutator(black_box(&ops[20])))
    });
}

fn shapovalov(c: &mut Criterion) {
    let mut g = c.benchmark_group("shapovalov_expand");
    g.sample_size(10);
    g.bench_function("k2_d2", |b| b.iter(|| shapovalov_expand(black_box(2), 2)));
    g.bench_function("k3_d2", |b| b.iter(|| shapovalov_expand(black_box(3), 2)));
    g.finish();
}

fn minors(c: &mut Criterion) {
    let m = orbit_matrix(2);
    let mut g = c.benchmark_group("orbit");
    g.sample_size(10);
    g.bench_function("minors3_k2", |b| b.iter(|| black_box(&m).minors3()));
    g.finish();
}

criterion_group!(kernels, weyl_product, reduction, cone_bracket, shapovalov, minors);
criterion_main!(kernels);
