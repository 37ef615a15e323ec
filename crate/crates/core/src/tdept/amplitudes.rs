use num_complex::Complex64;

use super::{PerturbationSpec, TdeptError};
use crate::numerics::{NumericsError, QuadOptions, QuadratureResult};

const MINUS_I: Complex64 = Complex64::new(0.0, -1.0);

fn validate_time(t: f64) -> Result<(), TdeptError> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(TdeptError::InvalidArgument(format!(
            "time must be finite and >= 0, got {t}"
        )));
    }
    Ok(())
}

/// Breakpoints so that each panel holds a bounded number of oscillations.
fn time_breaks(spec: &PerturbationSpec, t: f64) -> Vec<f64> {
    let panels = ((t * spec.max_frequency() / 20.0).ceil() as usize).clamp(1, 10_000);
    (0..=panels).map(|k| t * k as f64 / panels as f64).collect()
}

/// First-order amplitude `C_n^(1)(t) = (f²/(iP)) ∫_0^t W_ni(t') dt'` by
/// adaptive Gauss-Kronrod quadrature.
pub fn first_order_amplitude(
    spec: &PerturbationSpec,
    n: usize,
    i: usize,
    t: f64,
    opts: &QuadOptions,
) -> Result<QuadratureResult<Complex64>, TdeptError> {
    spec.check_state(n)?;
    spec.check_state(i)?;
    validate_time(t)?;
    if t == 0.0 {
        return Ok(QuadratureResult {
            value: Complex64::new(0.0, 0.0),
            error_estimate: 0.0,
            evaluations: 0,
        });
    }
    let integrand = |s: f64| spec.w_element(n, i, s);
    let res = crate::numerics::integrate_with_breaks(&integrand, &time_breaks(spec, t), opts)?;
    let factor = MINUS_I * spec.link_factor(n);
    Ok(QuadratureResult {
        value: res.value * factor,
        error_estimate: res.error_estimate * factor.norm(),
        evaluations: res.evaluations,
    })
}

/// Second-order amplitude as a nested double time integral, each level by
/// adaptive quadrature:
/// `Σ_m (f_n²/(iP)) (f_m²/(iP)) ∫_0^t dt' W_nm(t') ∫_0^t' dt'' W_mi(t'')`.
pub fn second_order_amplitude(
    spec: &PerturbationSpec,
    n: usize,
    i: usize,
    t: f64,
    opts: &QuadOptions,
) -> Result<QuadratureResult<Complex64>, TdeptError> {
    spec.check_state(n)?;
    spec.check_state(i)?;
    validate_time(t)?;
    if t == 0.0 {
        return Ok(QuadratureResult {
            value: Complex64::new(0.0, 0.0),
            error_estimate: 0.0,
            evaluations: 0,
        });
    }
    let inner_opts = QuadOptions::new(opts.abs_tol * 1e-2, opts.rel_tol * 1e-2);
    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut evals = 0;
    for m in 0..spec.dimension() {
        let failure: std::cell::RefCell<Option<NumericsError>> = std::cell::RefCell::new(None);
        let inner_evals = std::cell::Cell::new(0usize);
        let outer = |s: f64| -> Complex64 {
            if s == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let inner = |u: f64| spec.w_element(m, i, u);
            match crate::numerics::integrate_with_breaks(&inner, &time_breaks(spec, s), &inner_opts)
            {
                Ok(r) => {
                    inner_evals.set(inner_evals.get() + r.evaluations);
                    spec.w_element(n, m, s) * r.value
                }
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    Complex64::new(0.0, 0.0)
                }
            }
        };
        let res = crate::numerics::integrate_with_breaks(&outer, &time_breaks(spec, t), opts)?;
        if let Some(e) = failure.into_inner() {
            return Err(e.into());
        }
        let factor = MINUS_I * spec.link_factor(n) * MINUS_I * spec.link_factor(m);
        total += res.value * factor;
        err += res.error_estimate * factor.norm();
        evals += res.evaluations + inner_evals.get();
    }
    Ok(QuadratureResult {
        value: total,
        error_estimate: err,
        evaluations: evals,
    })
}
