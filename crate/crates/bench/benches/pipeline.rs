use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use linkhom_bench::{double_dip, lopsided_arm, uniform_arm, zero};
use linkhom_core::arm::{spectrum, DEFAULT_ENUMERATION_CAP};
use linkhom_core::curve::{betti_curve_analysis, Tolerances};
use linkhom_core::line::betti_line;
use linkhom_core::oracle::{
    full_torus_complex, homology, run_thickened, snf::smith_normal_form, DEFAULT_CELL_BUDGET,
};
use linkhom_core::rational::rational_from_u64;

fn bench_spectrum(c: &mut Criterion) {
    let arm = uniform_arm(16);
    c.bench_function("spectrum_enumeration_k16", |b| {
        b.iter(|| spectrum(black_box(&arm), DEFAULT_ENUMERATION_CAP).unwrap())
    });
}

fn bench_line_formula(c: &mut Criterion) {
    let arm = uniform_arm(12);
    let h = rational_from_u64(1, 3);
    c.bench_function("line_formula_k12", |b| {
        b.iter(|| betti_line(black_box(&arm), black_box(&h)).unwrap())
    });
}

fn bench_curve_pipeline(c: &mut Criterion) {
    let arm = uniform_arm(3);
    let curve = double_dip();
    let tol = Tolerances::default();
    c.bench_function("curve_pipeline_double_dip", |b| {
        b.iter(|| {
            betti_curve_analysis(black_box(&arm), black_box(&curve), &tol, DEFAULT_ENUMERATION_CAP)
                .unwrap()
        })
    });
}

fn bench_band_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("band_oracle");
    group.sample_size(10);
    group.bench_function("equilateral_k3_n24", |b| {
        b.iter(|| {
            run_thickened(
                black_box(&uniform_arm(3)),
                &zero(),
                24,
                DEFAULT_CELL_BUDGET,
                None,
                DEFAULT_ENUMERATION_CAP,
            )
            .unwrap()
        })
    });
    group.bench_function("lopsided_k3_n16", |b| {
        b.iter(|| {
            run_thickened(
                black_box(&lopsided_arm()),
                &rational_from_u64(1, 5),
                16,
                DEFAULT_CELL_BUDGET,
                None,
                DEFAULT_ENUMERATION_CAP,
            )
            .unwrap()
        })
    });
    group.finish();
}

fn bench_torus_homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("full_torus");
    group.sample_size(10);
    group.bench_function("homology_k3_n8", |b| {
        let cx = full_torus_complex(3, 8, DEFAULT_CELL_BUDGET).unwrap();
        b.iter(|| homology(black_box(&cx)))
    });
    group.bench_function("snf_boundary2_k3_n8", |b| {
        let cx = full_torus_complex(3, 8, DEFAULT_CELL_BUDGET).unwrap();
        let m = cx.boundary_matrix(2);
        b.iter(|| smith_normal_form(black_box(&m)))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_spectrum,
    bench_line_formula,
    bench_curve_pipeline,
    bench_band_oracle,
    bench_torus_homology
);
criterion_main!(benches);
