//! Subcommand implementations. Each builds a [`Table`]; grid points are
//! evaluated in parallel and collected in grid order.

use std::f64::consts::PI;

use rayon::prelude::*;
use xpt_core::basis::ToyConfig;
use xpt_core::lithium::{
    analytic_integrals, two_center_oracle, F0Mode, FLiConvention, IntegralForm, KernelForm,
    LithiumModel, OracleWeight, Orbital, OrbitalParams, REFERENCE_TABLE1,
};
use xpt_core::tdept::{
    exact_amplitudes, ExactMethod, NestedOptions, NestedSeries, PerturbationSpec, Prefactor,
};

use crate::args::{
    DcsArgs, FLiArg, FormArg, GlobalOpts, IntegralsArgs, KernelArg, PrefactorArg, SigmaArgs,
    ToyArgs,
};
use crate::output::{Cell, Table};
use crate::CliError;

pub fn orbital_params(g: &GlobalOpts) -> Result<OrbitalParams, CliError> {
    let mut p = match &g.params {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            OrbitalParams::from_toml(&text).map_err(|e| CliError::Usage(e.to_string()))?
        }
        None => OrbitalParams::default(),
    };
    if let Some(x) = g.alpha1 {
        p.alpha1 = x;
    }
    if let Some(x) = g.alpha2 {
        p.alpha2 = x;
    }
    if let Some(x) = g.alpha_star {
        p.alpha_star = x;
    }
    if let Some(x) = g.beta {
        p.beta = x;
    }
    p.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(p)
}

pub fn model(g: &GlobalOpts) -> Result<LithiumModel, CliError> {
    let mut m = LithiumModel::new(orbital_params(g)?);
    m.integrals = form(g.integral_form);
    m.kernel = match g.kernel {
        KernelArg::Factored => KernelForm::Factored,
        KernelArg::Printed => KernelForm::Printed,
    };
    m.f0_mode = if g.f0_frozen {
        F0Mode::Frozen
    } else {
        F0Mode::AtMomentumTransfer
    };
    m.f_li = match g.f_li {
        FLiArg::Adopted => FLiConvention::Adopted,
        FLiArg::Computed => FLiConvention::Computed,
    };
    Ok(m)
}

fn form(f: FormArg) -> IntegralForm {
    match f {
        FormArg::Corrected => IntegralForm::Corrected,
        FormArg::Printed => IntegralForm::Printed,
    }
}

/// `steps` points from `lo` to `hi`; a single point needs `lo == hi`.
pub fn grid(lo: f64, hi: f64, steps: usize, log: bool, name: &str) -> Result<Vec<f64>, CliError> {
    if !lo.is_finite() || !hi.is_finite() || steps == 0 {
        return Err(CliError::Usage(format!(
            "{name}: bounds must be finite and steps >= 1"
        )));
    }
    if steps == 1 {
        if lo != hi {
            return Err(CliError::Usage(format!(
                "{name}: a single step needs equal bounds"
            )));
        }
        return Ok(vec![lo]);
    }
    if hi <= lo {
        return Err(CliError::Usage(format!(
            "{name}: grid must be strictly increasing"
        )));
    }
    if log && lo <= 0.0 {
        return Err(CliError::Usage(format!(
            "{name}: logarithmic grid needs positive bounds"
        )));
    }
    let n = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| {
            let s = i as f64 / n;
            if log {
                lo * (hi / lo).powf(s)
            } else {
                lo + (hi - lo) * s
            }
        })
        .collect())
}

fn compute<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

const INTEGRAL_COLUMNS: [&str; 8] = [
    "delta_1s1s",
    "delta_1s2s",
    "s_1s1s",
    "s_1s2s",
    "k_1s1s_inv_bohr",
    "k_1s2s_inv_bohr",
    "a_1s1s_inv_bohr",
    "a_1s2s_inv_bohr",
];

/// Bra, ket and weight of each integral, in [`INTEGRAL_COLUMNS`] order.
pub const INTEGRAL_PAIRS: [(Orbital, Orbital, OracleWeight); 8] = [
    (Orbital::LiPlus1s, Orbital::Li1s, OracleWeight::Unity),
    (Orbital::LiPlus1s, Orbital::Li2s, OracleWeight::Unity),
    (Orbital::H1s, Orbital::Li1s, OracleWeight::Unity),
    (Orbital::H1s, Orbital::Li2s, OracleWeight::Unity),
    (
        Orbital::LiPlus1s,
        Orbital::Li1s,
        OracleWeight::InverseRProton,
    ),
    (
        Orbital::LiPlus1s,
        Orbital::Li2s,
        OracleWeight::InverseRProton,
    ),
    (Orbital::H1s, Orbital::Li1s, OracleWeight::InverseRProton),
    (Orbital::H1s, Orbital::Li2s, OracleWeight::InverseRProton),
];

pub fn integrals(g: &GlobalOpts, a: &IntegralsArgs) -> Result<Table, CliError> {
    let params = orbital_params(g)?;
    let rs = grid(a.r_min, a.r_max, a.steps, false, "R")?;
    if rs[0] <= 0.0 {
        return Err(CliError::Usage("R must be positive".into()));
    }
    let mut cols = vec!["R_bohr".to_string()];
    cols.extend(INTEGRAL_COLUMNS.iter().map(|c| c.to_string()));
    if a.oracle {
        cols.extend(INTEGRAL_COLUMNS.iter().map(|c| format!("oracle_{c}")));
        cols.extend(
            INTEGRAL_COLUMNS
                .iter()
                .map(|c| format!("relerr_{}", c.split("_inv").next().unwrap())),
        );
    }
    let mut table = Table::new(cols);
    let f = form(g.integral_form);
    let rows: Result<Vec<Vec<Cell>>, CliError> = rs
        .par_iter()
        .map(|&r| {
            let set = analytic_integrals(r, &params, f).map_err(compute)?;
            let values: Vec<f64> = set.named().iter().map(|(_, v)| *v).collect();
            let mut row: Vec<Cell> = vec![r.into()];
            row.extend(values.iter().map(|&v| Cell::from(v)));
            if a.oracle {
                let oracle = INTEGRAL_PAIRS
                    .iter()
                    .map(|&(b, k, w)| two_center_oracle(b, k, w, r, &params, a.oracle_tol))
                    .collect::<Result<Vec<f64>, _>>()
                    .map_err(compute)?;
                row.extend(oracle.iter().map(|&v| Cell::from(v)));
                row.extend(
                    values
                        .iter()
                        .zip(&oracle)
                        .map(|(v, o)| Cell::from((v - o).abs() / o.abs())),
                );
            }
            Ok(row)
        })
        .collect();
    for row in rows? {
        table.push(row);
    }
    Ok(table)
}

fn theta_grid(a: &DcsArgs, k: f64) -> Result<Vec<f64>, CliError> {
    let mut thetas = grid(0.0, PI, a.theta_steps.max(2), false, "theta")?;
    if a.forward_steps > 0 {
        if !(a.forward_q_max > 0.0) {
            return Err(CliError::Usage("--forward-q-max must be positive".into()));
        }
        thetas.extend((1..=a.forward_steps).map(|i| {
            let q = a.forward_q_max * i as f64 / a.forward_steps as f64;
            2.0 * (q / (2.0 * k)).min(1.0).asin()
        }));
        thetas.sort_by(f64::total_cmp);
        thetas.dedup();
    }
    Ok(thetas)
}

pub fn dcs(g: &GlobalOpts, a: &DcsArgs) -> Result<Table, CliError> {
    let m = model(g)?;
    let ks = match (a.k_min, a.k_max) {
        (Some(lo), Some(hi)) => grid(lo, hi, a.k_steps, a.log, "k")?,
        _ if !a.k.is_empty() => a.k.clone(),
        _ => return Err(CliError::Usage("give --k or --k-min/--k-max".into())),
    };
    if ks.iter().any(|&k| !(k > 0.0) || !k.is_finite()) {
        return Err(CliError::Usage("wave vectors must be positive".into()));
    }
    let mut points = Vec::new();
    for &k in &ks {
        for t in theta_grid(a, k)? {
            points.push((k, t));
        }
    }
    let values: Vec<f64> = points
        .par_iter()
        .map(|&(k, t)| m.dcs(k, t))
        .collect::<Result<_, _>>()
        .map_err(compute)?;
    let mut table = Table::new([
        "k_inv_bohr",
        "theta_rad",
        "theta_deg",
        "dcs_cm2_per_sr",
        "dcs_dtheta_cm2_per_rad",
    ]);
    for (&(k, t), &v) in points.iter().zip(&values) {
        table.push(vec![
            k.into(),
            t.into(),
            t.to_degrees().into(),
            v.into(),
            (2.0 * PI * t.sin() * v).into(),
        ]);
    }
    Ok(table)
}

const SIGMA_COLUMNS: [&str; 6] = [
    "k_inv_bohr",
    "e_ev",
    "v_cm_s",
    "sigma_bohr2",
    "sigma_cm2",
    "branch",
];

fn sigma_rows(m: &LithiumModel, ks: &[f64]) -> Result<Vec<Vec<Cell>>, CliError> {
    let rows = m.table1(ks).map_err(compute)?;
    Ok(rows
        .iter()
        .map(|r| {
            vec![
                r.k.into(),
                r.e_ev.into(),
                r.v_cm_s.into(),
                r.sigma_au.into(),
                r.sigma_cm2.into(),
                r.branch.label().into(),
            ]
        })
        .collect())
}

pub fn sigma(g: &GlobalOpts, a: &SigmaArgs) -> Result<Table, CliError> {
    let m = model(g)?;
    let ks = grid(a.k_min, a.k_max, a.steps, a.log, "k")?;
    if ks[0] <= 0.0 {
        return Err(CliError::Usage("wave vectors must be positive".into()));
    }
    let mut table = Table::new(SIGMA_COLUMNS);
    for row in sigma_rows(&m, &ks)? {
        table.push(row);
    }
    Ok(table)
}

pub fn table1(g: &GlobalOpts) -> Result<Table, CliError> {
    let m = model(g)?;
    let ks: Vec<f64> = REFERENCE_TABLE1.iter().map(|r| r.0).collect();
    let mut cols = SIGMA_COLUMNS.to_vec();
    cols.extend(["published_sigma_cm2", "ratio_computed_to_published"]);
    let mut table = Table::new(cols);
    for (mut row, &(_, published)) in sigma_rows(&m, &ks)?
        .into_iter()
        .zip(REFERENCE_TABLE1.iter())
    {
        let computed = match row[4] {
            Cell::Num(Some(x)) => x,
            _ => f64::NAN,
        };
        row.push(published.into());
        row.push((computed / published).into());
        table.push(row);
    }
    Ok(table)
}

pub fn toy(a: &ToyArgs) -> Result<Table, CliError> {
    let text = std::fs::read_to_string(&a.config)
        .map_err(|e| CliError::Usage(format!("{}: {e}", a.config.display())))?;
    let cfg = ToyConfig::from_toml(&text).map_err(|e| CliError::Usage(e.to_string()))?;
    let order = a.order.unwrap_or(cfg.run.max_order);
    if order == 0 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    let mut spec = PerturbationSpec::from_toy(&cfg).map_err(|e| CliError::Usage(e.to_string()))?;
    if a.prefactor == PrefactorArg::Global {
        spec = spec.with_prefactor(Prefactor::Global { f0: a.f0 });
    }
    let times = cfg.run.time_grid();
    let t_max = times.last().copied().unwrap_or(0.0);
    let opts = NestedOptions {
        max_order: order,
        ..NestedOptions::default()
    };
    let series = NestedSeries::compute(&spec, cfg.initial, order, t_max, &opts).map_err(compute)?;
    let tables = (1..=order)
        .map(|k| series.table(k, &times))
        .collect::<Result<Vec<_>, _>>()
        .map_err(compute)?;
    let exact: Vec<_> = times
        .par_iter()
        .map(|&t| exact_amplitudes(&spec, cfg.initial, t, ExactMethod::Auto))
        .collect::<Result<_, _>>()
        .map_err(compute)?;

    let mut cols = vec!["t_au".to_string(), "state".to_string()];
    for k in 1..=order {
        cols.push(format!("c{k}_re"));
        cols.push(format!("c{k}_im"));
    }
    cols.extend(
        [
            "series_re",
            "series_im",
            "exact_re",
            "exact_im",
            "abs_error",
            "converging",
        ]
        .map(String::from),
    );
    let mut table = Table::new(cols);
    for (ti, &t) in times.iter().enumerate() {
        for (n, &e) in exact[ti].iter().enumerate().take(spec.dimension()) {
            let s = series.series(n, t);
            let mut row: Vec<Cell> = vec![t.into(), n.into()];
            for tab in &tables {
                row.push(tab.values[ti][n].re.into());
                row.push(tab.values[ti][n].im.into());
            }
            row.extend([
                s.value.re.into(),
                s.value.im.into(),
                e.re.into(),
                e.im.into(),
                (s.value - e).norm().into(),
            ]);
            row.push(Cell::Text(s.converging.to_string()));
            table.push(row);
        }
    }
    Ok(table)
}
