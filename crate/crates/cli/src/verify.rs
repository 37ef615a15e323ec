//! Oracle and invariant checks behind `xpt verify`.

use xpt_core::basis::{ProfileConfig, RunConfig, ToyConfig};
use xpt_core::lithium::{
    analytic_integrals, f0_closed_form, f_li_squared, kernel, kernel_four_term, sigma_highk,
    two_center_oracle, IntegralForm, KernelForm, LithiumModel,
};
use xpt_core::numerics::{QuadOptions, RadialOptions};
use xpt_core::permsym::{
    young_operator, Combination, Permutation, SpinFunction, Surd, YoungConvention,
};
use xpt_core::scattering::{t_operator_solve, ResolventMode, ScatteringToy, SolveMethod};
use xpt_core::tdept::{exact_amplitudes, first_order_amplitude, ExactMethod, PerturbationSpec};
use xpt_core::Complex64;

use crate::commands::INTEGRAL_PAIRS;
use crate::output::{Cell, Table};
use crate::CliError;

struct Check {
    name: &'static str,
    value: f64,
    threshold: f64,
}

impl Check {
    fn new(name: &'static str, value: f64, threshold: f64) -> Self {
        Self {
            name,
            value,
            threshold,
        }
    }

    fn passed(&self) -> bool {
        self.value <= self.threshold
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn exact(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

fn e<T>(x: Result<T, xpt_core::permsym::PermsymError>) -> Result<T, String> {
    x.map_err(|err| err.to_string())
}

fn young_checks() -> Result<Vec<Check>, String> {
    let p = |s| Permutation::parse(3, s).map_err(|err| err.to_string());
    let w11 = e(young_operator(&[2, 1], 1, 1, YoungConvention::Printed))?;
    let w12 = e(young_operator(&[2, 1], 1, 2, YoungConvention::Printed))?;
    let n = Surd::sqrt_rational(xpt_core::permsym::Rational::new(1, 12)).ok_or("sqrt")?;
    let mut ok11 = w11.terms().len() == 6;
    for (g, c) in [
        ("e", 2),
        ("P12", 2),
        ("P23", -1),
        ("P13", -1),
        ("P123", -1),
        ("P132", -1),
    ] {
        ok11 &= w11.coefficient(&p(g)?) == n * Surd::int(c);
    }
    let mut ok12 = true;
    for (g, c) in [
        ("e", 0),
        ("P12", 0),
        ("P23", 1),
        ("P13", -1),
        ("P123", -1),
        ("P132", 1),
    ] {
        ok12 &= w12.coefficient(&p(g)?) == Surd::int(c);
    }
    let psi2_zero = e(w12.apply(&Combination::product(vec!["1s", "1s", "2s"])))?.is_zero();
    let aba = SpinFunction::parse("aba").ok_or("spin")?;
    let x1 =
        e(e(young_operator(&[2, 1], 2, 2, YoungConvention::Printed))?.apply_to_particles(&aba))?;
    let half_root3 = Surd::sqrt_rational(xpt_core::permsym::Rational::new(3, 4)).ok_or("sqrt")?;
    let x1_ok = x1
        == aba
            .sub(&SpinFunction::parse("baa").ok_or("spin")?)
            .scale(half_root3);
    let f2 = f_li_squared().map_err(|err| err.to_string())?;
    Ok(vec![
        Check::new("young_omega11_printed_coefficients", exact(ok11), 0.0),
        Check::new("young_omega12_printed_coefficients", exact(ok12), 0.0),
        Check::new(
            "lithium_second_spatial_function_vanishes",
            exact(psi2_zero),
            0.0,
        ),
        Check::new("lithium_first_spin_function", exact(x1_ok), 0.0),
        Check::new(
            "f_li_squared_from_young_operators_is_3",
            exact(f2 == Surd::int(3)),
            0.0,
        ),
    ])
}

fn lithium_checks(tol: f64) -> Result<Vec<Check>, String> {
    let s = |e: xpt_core::lithium::LithiumError| e.to_string();
    let m = LithiumModel::default();
    let p = m.params;
    let mut worst = 0.0f64;
    let mut worst_kernel = 0.0f64;
    for &r in &[0.5, 1.0, 2.0, 4.0, 8.0, 16.0] {
        let set = analytic_integrals(r, &p, IntegralForm::Corrected).map_err(s)?;
        for ((_, v), &(b, k, w)) in set.named().iter().zip(INTEGRAL_PAIRS.iter()) {
            let o = two_center_oracle(b, k, w, r, &p, 1e-11).map_err(s)?;
            worst = worst.max(rel(*v, o));
        }
        let direct = kernel_four_term(&set).map_err(s)?;
        worst_kernel = worst_kernel.max(rel(kernel(&set, KernelForm::Factored), direct));
    }
    let mut f0_worst = 0.0f64;
    for &q in &[0.0, 0.5, 2.0] {
        f0_worst = f0_worst.max(rel(m.f0_factor(q).map_err(s)?, f0_closed_form(q, &p)));
    }
    let opts = |t| RadialOptions {
        rel_tol: t,
        support: 90.0,
        ..RadialOptions::default()
    };
    let a = m.f0_factor_with(0.0, &opts(1e-8)).map_err(s)?;
    let b = m.f0_factor_with(0.0, &opts(5e-9)).map_err(s)?;
    let c = 5.0 * sigma_highk(5.0).map_err(s)?;
    let mut law = 0.0f64;
    for i in 0..=30 {
        let k = 5.0 * 1000f64.powf(i as f64 / 30.0);
        law = law.max(rel(k * sigma_highk(k).map_err(s)?, c));
    }
    let mut negative = 0.0f64;
    for &k in &[0.3, 3.0, 30.0, 300.0] {
        for i in 0..=12 {
            let v = m
                .dcs(k, std::f64::consts::PI * i as f64 / 12.0)
                .map_err(s)?;
            negative = negative.max(-v);
        }
    }
    Ok(vec![
        Check::new("integrals_vs_two_center_oracle_max_relerr", worst, tol),
        Check::new(
            "four_term_vs_factored_kernel_max_relerr",
            worst_kernel,
            1e-10,
        ),
        Check::new(
            "f0_closed_form_vs_radial_max_relerr",
            f0_worst,
            tol.max(1e-7),
        ),
        Check::new("f0_at_zero_tolerance_halving_relchange", rel(b, a), 1e-8),
        Check::new("high_k_sigma_times_k_spread", law, 1e-12),
        Check::new("dcs_most_negative_value", negative, 0.0),
    ])
}

fn toy_checks() -> Result<Vec<Check>, String> {
    let cfg = ToyConfig {
        energies: vec![0.0, 0.7, 1.9],
        p_count: 1,
        exchange_overlaps: None,
        normalization: None,
        v_re: vec![
            vec![0.0, 0.03, 0.01],
            vec![0.03, 0.02, 0.04],
            vec![0.01, 0.04, -0.01],
        ],
        v_im: Some(vec![
            vec![0.0, 0.01, 0.0],
            vec![-0.01, 0.0, 0.02],
            vec![0.0, -0.02, 0.0],
        ]),
        coupling: 1.0,
        initial: 0,
        profile: ProfileConfig::Constant,
        run: RunConfig::default(),
    };
    let spec = PerturbationSpec::from_toy(&cfg).map_err(|e| e.to_string())?;
    let t = 3.0;
    let first = first_order_amplitude(&spec, 1, 0, t, &QuadOptions::with_tol(1e-13))
        .map_err(|e| e.to_string())?
        .value;
    let (v10, w) = (Complex64::new(0.03, -0.01), 0.7);
    let closed = -v10 * (Complex64::new(0.0, w * t).exp() - 1.0) / w;
    let born = (first - closed).norm() / closed.norm();
    let ex =
        exact_amplitudes(&spec, 0, t, ExactMethod::MatrixExponential).map_err(|e| e.to_string())?;
    let weak = (first - ex[1]).norm() / ex[1].norm();

    let toy = ScatteringToy::from_toy(&cfg).map_err(|e| e.to_string())?;
    let it = SolveMethod::Iterative {
        max_iterations: 500,
        tol: 1e-14,
    };
    let a = t_operator_solve(&toy, 0.35, 1e-3, ResolventMode::Unperturbed, it)
        .map_err(|e| e.to_string())?;
    let b = t_operator_solve(&toy, 0.35, 1e-3, ResolventMode::Full, SolveMethod::Direct)
        .map_err(|e| e.to_string())?;
    let scale = b.matrix.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let diff = (&a.matrix - &b.matrix)
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        / scale;
    Ok(vec![
        Check::new("toy_first_order_vs_closed_form_relerr", born, 1e-10),
        Check::new("toy_first_order_vs_exact_propagator_relerr", weak, 0.1),
        Check::new("t_operator_iterative_vs_resolvent_relerr", diff, 1e-10),
    ])
}

pub fn verify(tol: f64) -> Result<(Table, bool), CliError> {
    if !(tol > 0.0) {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    let mut checks = Vec::new();
    for group in [young_checks(), lithium_checks(tol), toy_checks()] {
        checks.extend(group.map_err(CliError::Compute)?);
    }
    let mut table = Table::new(["check", "value", "threshold", "status"]);
    let mut all = true;
    for c in &checks {
        all &= c.passed();
        table.push(vec![
            Cell::from(c.name),
            c.value.into(),
            c.threshold.into(),
            c.passed().into(),
        ]);
    }
    Ok((table, all))
}
