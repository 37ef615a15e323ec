use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use nalgebra::DMatrix;
use xpt_core::basis::ProfileConfig;
use xpt_core::lithium::{
    analytic_integrals, f0_closed_form, IntegralForm, LithiumModel, OrbitalParams,
};
use xpt_core::permsym::{young_operator, YoungConvention};
use xpt_core::scattering::{t_operator_solve, ResolventMode, ScatteringToy, SolveMethod};
use xpt_core::tdept::{NestedOptions, NestedSeries, PerturbationSpec};
use xpt_core::Complex64;

fn permsym(c: &mut Criterion) {
    c.bench_function("young_operators_s3", |b| {
        b.iter(|| {
            for (r, s) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                black_box(young_operator(&[2, 1], r, s, YoungConvention::Printed).unwrap());
            }
        })
    });
}

fn integrals(c: &mut Criterion) {
    let params = OrbitalParams::default();
    let mut group = c.benchmark_group("analytic_integrals");
    for r in [0.5, 4.0, 20.0] {
        group.bench_with_input(BenchmarkId::from_parameter(r), &r, |b, &r| {
            b.iter(|| analytic_integrals(black_box(r), &params, IntegralForm::Corrected).unwrap())
        });
    }
    group.finish();
}

fn lithium(c: &mut Criterion) {
    let model = LithiumModel::default();
    c.bench_function("f0_closed_form", |b| {
        b.iter(|| f0_closed_form(black_box(0.7), &model.params))
    });
    c.bench_function("kernel_transform_q1", |b| {
        b.iter(|| model.kernel_transform(black_box(1.0)).unwrap())
    });
    c.bench_function("dcs_k10_theta0.1", |b| {
        b.iter(|| model.dcs(black_box(10.0), 0.1).unwrap())
    });
    let mut slow = c.benchmark_group("cross_section");
    slow.sample_size(10);
    slow.bench_function("sigma_direct_k2", |b| {
        b.iter(|| model.sigma_direct(black_box(2.0)).unwrap())
    });
    slow.finish();
}

fn tdept(c: &mut Criterion) {
    let v = DMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::new(0.2, 0.0),
            Complex64::new(1.0, 0.3),
            Complex64::new(1.0, -0.3),
            Complex64::new(-0.1, 0.0),
        ],
    );
    let spec = PerturbationSpec::from_matrix(
        vec![0.0, 0.7],
        vec![1.2, 0.9],
        2,
        v,
        ProfileConfig::Constant,
    )
    .unwrap()
    .scaled(0.05);
    let mut group = c.benchmark_group("nested_series");
    for order in [1, 2, 3] {
        group.bench_with_input(BenchmarkId::from_parameter(order), &order, |b, &order| {
            b.iter(|| {
                NestedSeries::compute(&spec, 0, order, 5.0, &NestedOptions::default()).unwrap()
            })
        });
    }
    group.finish();
}

fn scattering(c: &mut Criterion) {
    let n = 6;
    let energies: Vec<f64> = (0..n).map(|i| 0.3 * i as f64).collect();
    let v = DMatrix::from_fn(n, n, |i, j| {
        Complex64::new(0.02 / (1.0 + (i + j) as f64), 0.01 * (i as f64 - j as f64))
    });
    let toy = ScatteringToy::new(energies, v, 1.1, 2).unwrap();
    let mut group = c.benchmark_group("t_operator_n6");
    group.bench_function("direct_full", |b| {
        b.iter(|| {
            t_operator_solve(
                &toy,
                black_box(0.45),
                1e-3,
                ResolventMode::Full,
                SolveMethod::Direct,
            )
            .unwrap()
        })
    });
    group.bench_function("iterative_unperturbed", |b| {
        let method = SolveMethod::Iterative {
            max_iterations: 500,
            tol: 1e-12,
        };
        b.iter(|| {
            t_operator_solve(
                &toy,
                black_box(0.45),
                1e-3,
                ResolventMode::Unperturbed,
                method,
            )
            .unwrap()
        })
    });
    group.finish();
}

criterion_group!(benches, permsym, integrals, lithium, tdept, scattering);
criterion_main!(benches);
