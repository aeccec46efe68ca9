use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use taukit_core::characters::modular_quotient_order;
use taukit_core::groups::cyclic;
use taukit_core::gset_geometry::congruence_grid;
use taukit_core::koszul_graded::diagonal_conormal;
use taukit_core::kspaces::{tau_checked, BundleSum, DecomposedClass};

fn tau(c: &mut Criterion) {
    let x = DecomposedClass::new(2, BundleSum::new(&[(-1, 2), (1, 1)]), BundleSum::new(&[(2, 1)]));
    for l in [2, 3, 4] {
        c.bench_function(&format!("tau^{l} on P^2, all routes"), |b| b.iter(|| tau_checked(black_box(&x), l).unwrap()));
    }
}

fn characters(c: &mut Criterion) {
    c.bench_function("order of K_0(C_7, F_7)/(regular)", |b| b.iter(|| modular_quotient_order(black_box(7)).unwrap()));
}

fn geometry(c: &mut Criterion) {
    let mut group = c.benchmark_group("slow");
    group.sample_size(10);
    group.bench_function("G-set congruence grid for C_3 up to l = 5", |b| {
        b.iter(|| congruence_grid(&cyclic(3), black_box(5)).unwrap())
    });
    group.bench_function("conormal of the diagonal, 2 vars, l = 3", |b| {
        b.iter(|| diagonal_conormal(2, black_box(3), 3).unwrap())
    });
    group.finish();
}

criterion_group!(benches, tau, characters, geometry);
criterion_main!(benches);
