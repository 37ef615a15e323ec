mod common;

use common::*;
use num_complex::Complex64;
use proptest::prelude::*;
use xpt_core::basis::ProfileConfig;
use xpt_core::numerics::QuadOptions;
use xpt_core::tdept::*;

fn tight() -> QuadOptions {
    QuadOptions::new(1e-13, 1e-12)
}

#[test]
fn exchange_off_constant_first_order_closed_form() {
    let e = vec![0.0, 0.8];
    let v = two_state_matrix();
    let s = spec(
        e.clone(),
        vec![1.0, 1.0],
        1,
        v.clone(),
        ProfileConfig::Constant,
    );
    let t = 3.7;
    let got = first_order_amplitude(&s, 1, 0, t, &tight()).unwrap().value;
    let w = e[1] - e[0];
    let expected = v[(1, 0)] * (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, w * t)) / w;
    assert!((got - expected).norm() < 1e-12, "{got} vs {expected}");
}

#[test]
fn exchange_off_orders_match_standard_theory() {
    let e = vec![0.0, 0.55, 1.3];
    let v = three_state_matrix();
    for profile in [
        ProfileConfig::Constant,
        ProfileConfig::Harmonic { omega: 0.9 },
    ] {
        let drive: Vec<(Complex64, f64)> = match profile {
            ProfileConfig::Harmonic { omega } => vec![(c(0.5, 0.0), omega), (c(0.5, 0.0), -omega)],
            _ => vec![(c(1.0, 0.0), 0.0)],
        };
        let s = spec(e.clone(), vec![1.0; 3], 1, v.clone(), profile.clone());
        let o1 = exact_order(&e, &[1.0; 3], &v, &drive, 0, 1);
        let o2 = exact_order(&e, &[1.0; 3], &v, &drive, 0, 2);
        for &t in &[0.4, 2.5, 6.0] {
            for n in 0..3 {
                let a1 = first_order_amplitude(&s, n, 0, t, &tight()).unwrap().value;
                let a2 = second_order_amplitude(&s, n, 0, t, &tight()).unwrap().value;
                assert!(
                    (a1 - o1[n].eval(t)).norm() < 1e-10,
                    "first order n={n} t={t}"
                );
                assert!(
                    (a2 - o2[n].eval(t)).norm() < 1e-10,
                    "second order n={n} t={t}"
                );
            }
        }
    }
}

#[test]
fn exchange_first_order_matches_riemann_sum() {
    // P = 2, f = 1.2 (exchange overlap 0.3 enters only through f here).
    let e = vec![0.0, 0.6];
    let v = two_state_matrix();
    let s = spec(
        e.clone(),
        vec![1.2, 1.2],
        2,
        v.clone(),
        ProfileConfig::Gaussian {
            center: 1.0,
            width: 0.7,
        },
    );
    let t: f64 = 2.0;
    let got = first_order_amplitude(&s, 1, 0, t, &tight()).unwrap().value;
    let dt: f64 = 1e-4;
    let steps = (t / dt).round() as usize;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..steps {
        let tm = (k as f64 + 0.5) * dt;
        sum += s.w_element(1, 0, tm) * dt;
    }
    let riemann = Complex64::new(0.0, -1.2 * 1.2 / 2.0) * sum;
    assert!((got - riemann).norm() < 1e-8, "{got} vs {riemann}");
}

#[test]
fn second_order_matches_double_riemann_sum() {
    let e = vec![0.0, 0.45, 0.9];
    let v = three_state_matrix();
    let f = vec![1.2, 0.9, 1.1];
    let s = spec(
        e.clone(),
        f.clone(),
        2,
        v,
        ProfileConfig::Harmonic { omega: 0.7 },
    );
    let t: f64 = 2.0;
    let dt: f64 = 1e-4;
    let steps = (t / dt).round() as usize;
    for n in 0..3 {
        let got = second_order_amplitude(&s, n, 0, t, &tight()).unwrap().value;
        let mut total = Complex64::new(0.0, 0.0);
        for m in 0..3 {
            // inner cumulative midpoint sum of W_m0 evaluated at outer midpoints
            let mut inner = Complex64::new(0.0, 0.0);
            let mut outer = Complex64::new(0.0, 0.0);
            for k in 0..steps {
                let tm = (k as f64 + 0.5) * dt;
                // inner integral from 0 to tm: completed cells plus half of the current one
                let half = s.w_element(m, 0, tm - 0.25 * dt) * (0.5 * dt);
                outer += s.w_element(n, m, tm) * (inner + half) * dt;
                inner += s.w_element(m, 0, tm) * dt;
            }
            total += outer * (-(f[n] * f[n] / 2.0) * (f[m] * f[m] / 2.0));
        }
        assert!((got - total).norm() < 1e-7, "n={n}: {got} vs {total}");
    }
}

#[test]
fn nested_orders_agree_with_adaptive_quadrature() {
    let e = vec![0.0, 0.45, 0.9];
    let f = vec![1.2, 0.9, 1.1];
    let s = spec(
        e,
        f,
        2,
        three_state_matrix(),
        ProfileConfig::Gaussian {
            center: 2.0,
            width: 1.0,
        },
    );
    let t = 4.0;
    let series = NestedSeries::compute(&s, 0, 2, t, &NestedOptions::default()).unwrap();
    for n in 0..3 {
        let a1 = first_order_amplitude(&s, n, 0, t, &tight()).unwrap().value;
        let a2 = second_order_amplitude(&s, n, 0, t, &tight()).unwrap().value;
        assert!((series.amplitude(1, n, t) - a1).norm() < 1e-10);
        assert!((series.amplitude(2, n, t) - a2).norm() < 1e-10);
    }
}

#[test]
fn nested_and_symmetric_forms_agree() {
    let e = vec![0.0, 0.45, 0.9];
    let f = vec![1.2, 0.9, 1.1];
    let s = spec(
        e,
        f,
        2,
        three_state_matrix(),
        ProfileConfig::Harmonic { omega: 0.5 },
    );
    let t = 2.5;
    for order in [2, 3] {
        let series = NestedSeries::compute(&s, 0, order, t, &NestedOptions::default()).unwrap();
        for n in 0..3 {
            let sym = time_ordered_symmetric_amplitude(&s, n, 0, order, t, 16, 2).unwrap();
            let nested = series.amplitude(order, n, t);
            assert!(
                (sym - nested).norm() < 1e-7,
                "order {order} n={n}: {sym} vs {nested}"
            );
        }
    }
}

#[test]
fn higher_orders_match_closed_form_with_exchange_links() {
    let e = vec![0.0, 0.45, 0.9];
    let f = vec![1.2, 0.9, 1.1];
    let link: Vec<f64> = f.iter().map(|x| x * x / 2.0).collect();
    let v = three_state_matrix();
    let s = spec(e.clone(), f, 2, v.clone(), ProfileConfig::Constant);
    let t = 5.0;
    let series = NestedSeries::compute(&s, 1, 4, t, &NestedOptions::default()).unwrap();
    for order in 1..=4 {
        let exact = exact_order(&e, &link, &v, &[(c(1.0, 0.0), 0.0)], 1, order);
        for (n, ex) in exact.iter().enumerate() {
            assert!(
                (series.amplitude(order, n, t) - ex.eval(t)).norm() < 1e-10,
                "order {order} n {n}"
            );
        }
    }
}

#[test]
fn global_prefactor_equals_bra_state_for_uniform_normalization() {
    let e = vec![0.0, 0.45, 0.9];
    let bra = spec(
        e.clone(),
        vec![1.3; 3],
        6,
        three_state_matrix(),
        ProfileConfig::Constant,
    );
    let global = spec(
        e,
        vec![0.2, 5.0, 1.0],
        6,
        three_state_matrix(),
        ProfileConfig::Constant,
    )
    .with_prefactor(Prefactor::Global { f0: 1.3 });
    for n in 0..3 {
        let a = nth_order_amplitude(&bra, n, 0, 3, 2.0, &NestedOptions::default()).unwrap();
        let b = nth_order_amplitude(&global, n, 0, 3, 2.0, &NestedOptions::default()).unwrap();
        assert!((a - b).norm() < 1e-13);
    }
}

#[test]
fn order_above_maximum_is_rejected() {
    let s = spec(
        vec![0.0, 1.0],
        vec![1.0; 2],
        1,
        two_state_matrix(),
        ProfileConfig::Constant,
    );
    let err = nth_order_amplitude(&s, 1, 0, 5, 1.0, &NestedOptions::default()).unwrap_err();
    assert_eq!(err, TdeptError::OrderTooHigh { order: 5, max: 4 });
    let opts = NestedOptions {
        max_order: 6,
        ..NestedOptions::default()
    };
    assert!(nth_order_amplitude(&s, 1, 0, 5, 1.0, &opts).is_ok());
}

#[test]
fn zero_time_and_bad_indices() {
    let s = spec(
        vec![0.0, 1.0],
        vec![1.0; 2],
        1,
        two_state_matrix(),
        ProfileConfig::Constant,
    );
    assert_eq!(
        first_order_amplitude(&s, 1, 0, 0.0, &tight())
            .unwrap()
            .value,
        Complex64::new(0.0, 0.0)
    );
    assert!(matches!(
        first_order_amplitude(&s, 2, 0, 1.0, &tight()),
        Err(TdeptError::StateOutOfRange { .. })
    ));
    assert!(first_order_amplitude(&s, 1, 0, -1.0, &tight()).is_err());
}

#[test]
fn non_hermitian_toy_is_flagged() {
    let mut v = two_state_matrix();
    v[(0, 1)] = c(2.0, 0.0);
    let s = spec(vec![0.0, 1.0], vec![1.0; 2], 1, v, ProfileConfig::Constant);
    assert!(matches!(
        s.check_hermitian(0.0, 1e-12),
        Err(TdeptError::NotHermitian { .. })
    ));
}

#[test]
fn runge_kutta_reference_matches_exponential() {
    let s = spec(
        vec![0.0, 0.45, 0.9],
        vec![1.2, 0.9, 1.1],
        2,
        three_state_matrix(),
        ProfileConfig::Constant,
    );
    let a = exact_amplitudes(&s, 0, 3.0, ExactMethod::MatrixExponential).unwrap();
    let b = exact_amplitudes(&s, 0, 3.0, ExactMethod::RungeKutta { steps: 4000 }).unwrap();
    assert!((a - b).norm() < 1e-11);
}

#[test]
fn truncated_series_error_scales_as_next_order() {
    let base = spec(
        vec![0.0, 0.7],
        vec![1.2, 0.9],
        2,
        two_state_matrix(),
        ProfileConfig::Constant,
    );
    let t: f64 = 2.0;
    for (order, eps_list) in [
        (1usize, [1e-1, 1e-2, 1e-3, 1e-4]),
        (2, [1e-1, 1e-2, 1e-3, 1e-4]),
        (3, [2e-1, 1e-1, 5e-2, 2.5e-2]),
    ] {
        let mut res = Vec::new();
        for &eps in &eps_list {
            let s = base.scaled(eps);
            let exact = exact_amplitudes(&s, 0, t, ExactMethod::MatrixExponential).unwrap();
            let series = NestedSeries::compute(&s, 0, order, t, &NestedOptions::default()).unwrap();
            let r: f64 = (0..2)
                .map(|n| (series.series(n, t).value - exact[n]).norm_sqr())
                .sum::<f64>()
                .sqrt();
            res.push(r);
        }
        let slope = loglog_slope(&eps_list, &res);
        assert!(
            (slope - (order as f64 + 1.0)).abs() < 0.1,
            "order {order}: slope {slope}, residuals {res:?}"
        );
    }
}

#[test]
fn probability_defect_is_second_order() {
    let base = spec(
        vec![0.0, 0.7],
        vec![1.2, 0.9],
        2,
        two_state_matrix(),
        ProfileConfig::Constant,
    );
    let t: f64 = 2.0;
    let eps = [1e-1, 1e-2, 1e-3, 1e-4];
    let defects: Vec<f64> = eps
        .iter()
        .map(|&e| {
            let s = base.scaled(e);
            let series = NestedSeries::compute(&s, 0, 2, t, &NestedOptions::default()).unwrap();
            (1.0 - (0..2)
                .map(|n| series.series(n, t).value.norm_sqr())
                .sum::<f64>())
            .abs()
        })
        .collect();
    let slope = loglog_slope(&eps, &defects);
    assert!(
        (slope - 2.0).abs() < 0.1,
        "slope {slope}, defects {defects:?}"
    );
}

#[test]
fn strong_coupling_is_flagged_as_non_converging() {
    let s = spec(
        vec![0.0, 0.1],
        vec![1.0, 1.0],
        1,
        two_state_matrix(),
        ProfileConfig::Constant,
    )
    .scaled(3.0);
    let a = series_amplitude(&s, 1, 0, 6.0, 4, &NestedOptions::default()).unwrap();
    assert!(!a.converging);
    let weak = spec(
        vec![0.0, 0.1],
        vec![1.0, 1.0],
        1,
        two_state_matrix(),
        ProfileConfig::Constant,
    )
    .scaled(0.01);
    assert!(
        series_amplitude(&weak, 1, 0, 6.0, 4, &NestedOptions::default())
            .unwrap()
            .converging
    );
}

#[test]
fn interaction_picture_matrix_has_phases() {
    let s = spec(
        vec![0.0, 0.7],
        vec![1.0; 2],
        1,
        two_state_matrix(),
        ProfileConfig::Constant,
    );
    let w = interaction_picture_w(&s, 1.5);
    let expected = Complex64::from_polar(1.0, 0.7 * 1.5) * two_state_matrix()[(1, 0)];
    assert!((w[(1, 0)] - expected).norm() < 1e-15);
    assert!((w[(0, 0)] - two_state_matrix()[(0, 0)]).norm() < 1e-15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn amplitudes_are_homogeneous_in_the_coupling(eps in 0.01f64..2.0, t in 0.1f64..5.0, order in 1usize..=4) {
        let base = spec(vec![0.0, 0.45, 0.9], vec![1.2, 0.9, 1.1], 2, three_state_matrix(), ProfileConfig::Constant);
        let a = NestedSeries::compute(&base, 0, order, t, &NestedOptions::default()).unwrap();
        let b = NestedSeries::compute(&base.scaled(eps), 0, order, t, &NestedOptions::default()).unwrap();
        for n in 0..3 {
            let lhs = b.amplitude(order, n, t);
            let rhs = a.amplitude(order, n, t) * eps.powi(order as i32);
            prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
        }
    }

    #[test]
    fn first_order_constant_coupling_magnitude(t in 0.1f64..8.0, w in 0.0f64..3.0) {
        // C^(1) of a single constant coupling: |C| = 2|V| |sin(wt/2)/w| (f = 1, P = 1).
        let s = spec(vec![0.0, w], vec![1.0; 2], 1, two_state_matrix(), ProfileConfig::Constant);
        let a = first_order_amplitude(&s, 1, 0, t, &QuadOptions::new(1e-13, 1e-12)).unwrap().value;
        let v = two_state_matrix()[(1, 0)].norm();
        let expected = if w == 0.0 { v * t } else { 2.0 * v * (w * t / 2.0).sin().abs() / w };
        prop_assert!((a.norm() - expected).abs() < 1e-10);
    }
}
