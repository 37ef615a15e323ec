//! Acceptance criteria 1-10, one PASS/FAIL line each. Exits non-zero when
//! any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use nalgebra::{DMatrix, DVector};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xpt_core::basis::ProfileConfig;
use xpt_core::lithium::{
    analytic_integrals, f_li_squared, sigma_highk, two_center_oracle, IntegralForm, LithiumModel,
    OracleWeight, Orbital, OrbitalParams, REFERENCE_TABLE1, TABLE1_ACCEPTANCE_K,
};
use xpt_core::numerics::{QuadOptions, RadialOptions};
use xpt_core::permsym::{young_operator, Permutation, SpinFunction, Surd, YoungConvention};
use xpt_core::scattering::{t_operator_solve, ResolventMode, ScatteringToy, SolveMethod};
use xpt_core::tdept::{
    exact_amplitudes, first_order_amplitude, second_order_amplitude, ExactMethod, NestedOptions,
    NestedSeries, PerturbationSpec,
};
use xpt_core::Complex64;

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn within(elapsed: Duration, limit_s: f64, what: &str) -> Result<(), String> {
    if elapsed.as_secs_f64() < limit_s {
        Ok(())
    } else {
        Err(format!(
            "{what} took {:.1} s (limit {limit_s} s)",
            elapsed.as_secs_f64()
        ))
    }
}

fn sqrt_q(n: i64, d: i64) -> Surd {
    Surd::sqrt_rational(Ratio::new(n, d)).unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let p = |s| Permutation::parse(3, s).unwrap();
    let w11 = young_operator(&[2, 1], 1, 1, YoungConvention::Printed).map_err(|e| e.to_string())?;
    let w12 = young_operator(&[2, 1], 1, 2, YoungConvention::Printed).map_err(|e| e.to_string())?;
    let printed11 = [
        ("e", 2),
        ("P12", 2),
        ("P23", -1),
        ("P13", -1),
        ("P123", -1),
        ("P132", -1),
    ];
    let printed12 = [
        ("e", 0),
        ("P12", 0),
        ("P23", 1),
        ("P13", -1),
        ("P123", -1),
        ("P132", 1),
    ];
    for (g, k) in printed11 {
        if w11.coefficient(&p(g)) != sqrt_q(1, 12) * Surd::int(k) {
            return Err(format!(
                "omega11 coefficient of {g} is {}",
                w11.coefficient(&p(g))
            ));
        }
    }
    for (g, k) in printed12 {
        if w12.coefficient(&p(g)) != Surd::int(k) {
            return Err(format!(
                "omega12 coefficient of {g} is {}",
                w12.coefficient(&p(g))
            ));
        }
    }

    // The second spatial function evaluated at coordinates, term by term.
    let params = OrbitalParams::default();
    let orbital = |label: &str, r: f64| match label {
        "1s" => Orbital::Li1s.value(&params, r),
        _ => Orbital::Li2s.value(&params, r),
    };
    let labels = ["1s", "1s", "2s"];
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let r: Vec<f64> = (0..3).map(|_| rng.gen_range(0.0..6.0)).collect();
        let mut psi = 0.0;
        for (g, coeff) in w12.terms() {
            let permuted = g.apply_to_labels(&labels);
            psi += coeff.to_f64() * (0..3).map(|j| orbital(permuted[j], r[j])).product::<f64>();
        }
        worst = worst.max(psi.abs());
    }
    if worst > 1e-14 {
        return Err(format!("second lithium spatial function reaches {worst:e}"));
    }

    let aba = SpinFunction::parse("aba").unwrap();
    let x1 = young_operator(&[2, 1], 2, 2, YoungConvention::Printed)
        .unwrap()
        .apply_to_particles(&aba)
        .unwrap();
    let expected = aba
        .sub(&SpinFunction::parse("baa").unwrap())
        .scale(sqrt_q(3, 4));
    if x1 != expected {
        return Err("first lithium spin function differs from (sqrt3/2)(aba - baa)".into());
    }
    within(start.elapsed(), 1.0, "criterion 1")?;
    Ok(format!(
        "coefficients exact, max |Psi_Li2| = {worst:e} over 100 samples, X_Li1 exact"
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let m = LithiumModel::default();
    let opts = |t| RadialOptions {
        rel_tol: t,
        support: 90.0,
        ..RadialOptions::default()
    };
    let mut tol = 1e-8;
    let mut last = m
        .f0_factor_with(0.0, &opts(tol))
        .map_err(|e| e.to_string())?;
    let mut drift = 0.0f64;
    for _ in 0..3 {
        tol /= 2.0;
        let next = m
            .f0_factor_with(0.0, &opts(tol))
            .map_err(|e| e.to_string())?;
        drift = drift.max(rel(next, last));
        last = next;
    }
    let f0_ok = last.is_finite() && drift <= 1e-8;
    let f2 = f_li_squared().map_err(|e| e.to_string())?;
    within(start.elapsed(), 10.0, "criterion 2")?;
    let detail = format!("f0(0) = {last:.10e}, drift under halving {drift:e}; f_Li^2 from the Young operators = {f2}");
    if f2 != Surd::int(4) {
        return Err(format!("{detail}, so f_Li = sqrt3, not 2"));
    }
    if !f0_ok {
        return Err(detail);
    }
    Ok(detail)
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let p = OrbitalParams::default();
    let pairs = [
        (
            "delta_1s1s",
            Orbital::LiPlus1s,
            Orbital::Li1s,
            OracleWeight::Unity,
        ),
        (
            "delta_1s2s",
            Orbital::LiPlus1s,
            Orbital::Li2s,
            OracleWeight::Unity,
        ),
        ("s_1s1s", Orbital::H1s, Orbital::Li1s, OracleWeight::Unity),
        ("s_1s2s", Orbital::H1s, Orbital::Li2s, OracleWeight::Unity),
        (
            "k_1s1s",
            Orbital::LiPlus1s,
            Orbital::Li1s,
            OracleWeight::InverseRProton,
        ),
        (
            "k_1s2s",
            Orbital::LiPlus1s,
            Orbital::Li2s,
            OracleWeight::InverseRProton,
        ),
        (
            "a_1s1s",
            Orbital::H1s,
            Orbital::Li1s,
            OracleWeight::InverseRProton,
        ),
        (
            "a_1s2s",
            Orbital::H1s,
            Orbital::Li2s,
            OracleWeight::InverseRProton,
        ),
    ];
    let mut printed_failing = std::collections::BTreeSet::new();
    let mut worst_corrected = 0.0f64;
    for &r in &[0.5, 1.0, 2.0, 4.0, 8.0, 16.0] {
        let printed =
            analytic_integrals(r, &p, IntegralForm::Printed).map_err(|e| e.to_string())?;
        let corrected =
            analytic_integrals(r, &p, IntegralForm::Corrected).map_err(|e| e.to_string())?;
        for (i, &(name, b, k, w)) in pairs.iter().enumerate() {
            let o = two_center_oracle(b, k, w, r, &p, 1e-12).map_err(|e| e.to_string())?;
            if rel(printed.named()[i].1, o) > 1e-6 {
                printed_failing.insert(name);
            }
            worst_corrected = worst_corrected.max(rel(corrected.named()[i].1, o));
        }
    }
    within(start.elapsed(), 60.0, "criterion 3")?;
    let detail = format!(
        "printed forms off the oracle: {printed_failing:?} (errata, corrected forms supplied); corrected max rel. error {worst_corrected:e}"
    );
    if worst_corrected <= 1e-6 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let rows = LithiumModel::default()
        .table1(&TABLE1_ACCEPTANCE_K)
        .map_err(|e| e.to_string())?;
    let all_rows = LithiumModel::default()
        .table1(&REFERENCE_TABLE1.map(|r| r.0))
        .map_err(|e| e.to_string())?;
    within(start.elapsed(), 60.0, "criterion 4")?;
    let monotone = all_rows.windows(2).all(|w| w[1].sigma_cm2 < w[0].sigma_cm2);
    let ratios: Vec<f64> = rows
        .iter()
        .zip(REFERENCE_TABLE1.iter())
        .map(|(r, p)| r.sigma_cm2 / p.1)
        .collect();
    let outside: Vec<String> = rows
        .iter()
        .zip(&ratios)
        .filter(|(_, q)| !(0.5..=2.0).contains(*q))
        .map(|(r, q)| format!("k={}: x{q:.2}", r.k))
        .collect();
    let detail = format!(
        "monotone decreasing: {monotone}; ratios to the published column {:.2?}",
        ratios
    );
    if !monotone || !outside.is_empty() {
        return Err(format!(
            "{detail}; outside a factor 2 at {}",
            outside.join(", ")
        ));
    }
    Ok(detail)
}

fn criterion_5() -> Outcome {
    let reference = 5.0 * sigma_highk(5.0).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for i in 0..=300 {
        let k = 5.0 * 1000f64.powf(i as f64 / 300.0);
        worst = worst.max(rel(
            k * sigma_highk(k).map_err(|e| e.to_string())?,
            reference,
        ));
    }
    let detail = format!("max relative spread of sigma*k over [5, 5000]: {worst:e}");
    if worst <= 1e-12 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// `∫_0^t e^{iwt'} dt'`.
fn e_int(w: f64, t: f64) -> Complex64 {
    if w.abs() < 1e-12 {
        c(t, 0.0)
    } else {
        (c(0.0, w * t).exp() - 1.0) / c(0.0, w)
    }
}

/// `∫_0^t e^{iat1} ∫_0^{t1} e^{ibt2} dt2 dt1`.
fn nested_int(a: f64, b: f64, t: f64) -> Complex64 {
    if b.abs() < 1e-12 {
        if a.abs() < 1e-12 {
            return c(t * t / 2.0, 0.0);
        }
        let ia = c(0.0, a);
        return t * c(0.0, a * t).exp() / ia - (c(0.0, a * t).exp() - 1.0) / (ia * ia);
    }
    (e_int(a + b, t) - e_int(a, t)) / c(0.0, b)
}

/// Standard first and second order amplitudes for `V(t) = V cos(Ωt)`
/// (`Ω = 0` for a constant drive), written out term by term.
fn textbook_amplitudes(
    e: &[f64],
    v: &DMatrix<Complex64>,
    omega: f64,
    n: usize,
    i: usize,
    t: f64,
) -> (Complex64, Complex64) {
    let signs: &[f64] = if omega == 0.0 { &[0.0] } else { &[1.0, -1.0] };
    let weight = if omega == 0.0 { 1.0 } else { 0.5 };
    let minus_i = c(0.0, -1.0);
    let mut first = c(0.0, 0.0);
    for &s in signs {
        first += minus_i * v[(n, i)] * weight * e_int(e[n] - e[i] + s * omega, t);
    }
    let mut second = c(0.0, 0.0);
    for m in 0..e.len() {
        for &s1 in signs {
            for &s2 in signs {
                let a = e[n] - e[m] + s1 * omega;
                let b = e[m] - e[i] + s2 * omega;
                second += minus_i
                    * minus_i
                    * v[(n, m)]
                    * v[(m, i)]
                    * weight
                    * weight
                    * nested_int(a, b, t);
            }
        }
    }
    (first, second)
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0f64;
    for trial in 0..6 {
        let dim = 2 + trial % 3;
        let energies: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.5)).collect();
        let mut v = DMatrix::from_fn(dim, dim, |_, _| {
            c(rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3))
        });
        v = (&v + v.adjoint()) * c(0.5, 0.0);
        let omega = if trial % 2 == 0 {
            0.0
        } else {
            rng.gen_range(0.2..1.5)
        };
        let profile = if omega == 0.0 {
            ProfileConfig::Constant
        } else {
            ProfileConfig::Harmonic { omega }
        };
        let spec =
            PerturbationSpec::from_matrix(energies.clone(), vec![1.0; dim], 1, v.clone(), profile)
                .map_err(|e| e.to_string())?;
        let t = rng.gen_range(0.5..4.0);
        let opts = QuadOptions::with_tol(1e-13);
        for n in 0..dim {
            let (c1, c2) = textbook_amplitudes(&energies, &v, omega, n, 0, t);
            let a1 = first_order_amplitude(&spec, n, 0, t, &opts)
                .map_err(|e| e.to_string())?
                .value;
            let a2 = second_order_amplitude(&spec, n, 0, t, &opts)
                .map_err(|e| e.to_string())?
                .value;
            worst = worst
                .max((a1 - c1).norm() / c1.norm().max(1e-3))
                .max((a2 - c2).norm() / c2.norm().max(1e-3));
        }
    }
    let detail =
        format!("max relative deviation from textbook first/second order over 6 toys: {worst:e}");
    if worst <= 1e-10 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn loglog_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.log10()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.log10()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let num: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let den: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    num / den
}

fn criterion_7() -> Outcome {
    let v = DMatrix::from_row_slice(
        2,
        2,
        &[c(0.2, 0.0), c(1.0, 0.3), c(1.0, -0.3), c(-0.1, 0.0)],
    );
    let base = PerturbationSpec::from_matrix(
        vec![0.0, 0.7],
        vec![1.2, 0.9],
        2,
        v,
        ProfileConfig::Constant,
    )
    .map_err(|e| e.to_string())?;
    let t = 2.0;
    let eps = [1e-1, 1e-2, 1e-3, 1e-4];
    let mut defects = Vec::new();
    for &e in &eps {
        let s = base.scaled(e);
        let series = NestedSeries::compute(&s, 0, 2, t, &NestedOptions::default())
            .map_err(|e| e.to_string())?;
        defects.push(
            (1.0 - (0..2)
                .map(|n| series.series(n, t).value.norm_sqr())
                .sum::<f64>())
            .abs(),
        );
    }
    let defect_slope = loglog_slope(&eps, &defects);
    let mut slopes = Vec::new();
    for (order, eps_list) in [
        (1usize, [1e-1, 1e-2, 1e-3, 1e-4]),
        (2, [1e-1, 1e-2, 1e-3, 1e-4]),
        (3, [2e-1, 1e-1, 5e-2, 2.5e-2]),
    ] {
        let mut res = Vec::new();
        for &e in &eps_list {
            let s = base.scaled(e);
            let exact = exact_amplitudes(&s, 0, t, ExactMethod::MatrixExponential)
                .map_err(|e| e.to_string())?;
            let series = NestedSeries::compute(&s, 0, order, t, &NestedOptions::default())
                .map_err(|e| e.to_string())?;
            res.push(
                (0..2)
                    .map(|n| (series.series(n, t).value - exact[n]).norm_sqr())
                    .sum::<f64>()
                    .sqrt(),
            );
        }
        slopes.push((order, loglog_slope(&eps_list, &res)));
    }
    let ok = (defect_slope - 2.0).abs() < 0.1
        && slopes
            .iter()
            .all(|&(n, s)| (s - (n as f64 + 1.0)).abs() < 0.1);
    let detail = format!(
        "probability-defect slope {defect_slope:.3}; residual slopes by order {slopes:.3?}"
    );
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let n = rng.gen_range(2..7);
        let energy = rng.gen_range(-0.5..1.5);
        let eta = 1e-6;
        let energies: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..2.0)).collect();
        let raw = DMatrix::from_fn(n, n, |_, _| {
            c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        let g0 = DMatrix::from_diagonal(&DVector::from_iterator(
            n,
            energies.iter().map(|&e| c(energy - e, eta).inv()),
        ));
        let scale = 0.4 / (&raw * &g0).norm();
        let f0: f64 = rng.gen_range(0.5..2.0);
        let toy =
            ScatteringToy::new(energies, raw * c(scale, 0.0), f0, 2).map_err(|e| e.to_string())?;
        let it = SolveMethod::Iterative {
            max_iterations: 500,
            tol: 1e-15,
        };
        let a = t_operator_solve(&toy, energy, eta, ResolventMode::Unperturbed, it)
            .map_err(|e| e.to_string())?;
        let b = t_operator_solve(&toy, energy, eta, ResolventMode::Full, SolveMethod::Direct)
            .map_err(|e| e.to_string())?;
        worst = worst.max((&a.matrix - &b.matrix).norm() / b.matrix.norm());
    }
    let detail = format!("max relative difference over 10 random convergent toys: {worst:e}");
    if worst <= 1e-10 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// The `xpt` binary sits next to the `deps` directory holding this test.
/// `cargo test --workspace` builds it alongside the cli integration tests.
fn xpt_binary() -> Result<PathBuf, String> {
    let exe = std::env::current_exe().map_err(|e| e.to_string())?;
    let dir = exe
        .parent()
        .and_then(Path::parent)
        .ok_or("cannot locate the target directory")?;
    let bin = dir.join(format!("xpt{}", std::env::consts::EXE_SUFFIX));
    if bin.exists() {
        Ok(bin)
    } else {
        Err(format!(
            "{} not found; build it with `cargo build -p xpt-cli` or run `cargo test --workspace`",
            bin.display()
        ))
    }
}

fn xpt(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(xpt_binary()?)
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    Ok(out.stdout)
}

fn criterion_9() -> Outcome {
    let out = xpt(&[
        "dcs",
        "--k-min",
        "0.5",
        "--k-max",
        "500",
        "--k-steps",
        "7",
        "--log",
        "--theta-steps",
        "37",
        "--forward-steps",
        "40",
    ])?;
    let mut reader = csv::Reader::from_reader(out.as_slice());
    let mut sections: Vec<(f64, Vec<(f64, f64)>)> = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let (k, t, v): (f64, f64, f64) = (
            rec[0].parse().unwrap(),
            rec[1].parse().unwrap(),
            rec[3].parse().unwrap(),
        );
        match sections.last_mut() {
            Some((kk, s)) if *kk == k => s.push((t, v)),
            _ => sections.push((k, vec![(t, v)])),
        }
    }
    let points: usize = sections.iter().map(|s| s.1.len()).sum();
    let nonnegative = sections
        .iter()
        .all(|(_, s)| s.iter().all(|&(_, v)| v >= 0.0));
    let forward = sections
        .iter()
        .all(|(_, s)| s[0].0 == 0.0 && s.iter().all(|&(_, v)| v <= s[0].1));
    let mut ridge = Vec::new();
    for (k, s) in sections.iter().filter(|(k, _)| *k >= 50.0) {
        let first_min = (1..s.len() - 1)
            .find(|&i| s[i].1 < s[i - 1].1 && s[i].1 < s[i + 1].1)
            .map(|i| s[i].0);
        ridge.push((*k, first_min));
    }
    let ridge_present = !ridge.is_empty() && ridge.iter().all(|r| r.1.is_some());
    let moves_forward = ridge.windows(2).all(|w| w[1].1 < w[0].1);
    let detail = format!(
        "{points} grid points; nonnegative {nonnegative}; forward peaked {forward}; first minima for k >= 50: {:?}",
        ridge.iter().map(|(k, m)| format!("k={k:.0}: {:.4}", m.unwrap_or(f64::NAN))).collect::<Vec<_>>()
    );
    if nonnegative && forward && ridge_present && moves_forward {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_10() -> Outcome {
    let a = xpt(&["table1"])?;
    let b = xpt(&["table1"])?;
    if a == b && !a.is_empty() {
        Ok(format!("two runs, {} identical bytes", a.len()))
    } else {
        Err("table1 output differs between runs".into())
    }
}

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        ("Young-operator exactness", criterion_1),
        ("normalization", criterion_2),
        ("integral oracle suite", criterion_3),
        ("total cross-section table", criterion_4),
        ("high-k law", criterion_5),
        ("exchange-off reduction", criterion_6),
        ("series validity", criterion_7),
        ("T-operator identity", criterion_8),
        ("differential cross-section grid", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(d) => println!("criterion {:>2} PASS  {name} ({secs:.2} s): {d}", i + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2} s): {d}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
