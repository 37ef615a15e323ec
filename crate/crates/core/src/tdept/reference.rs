//! Non-perturbative reference solution of the amplitude equations
//! `i dC_n/dt = (f²/P) Σ_m W_nm(t) C_m`, used to validate the series.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::{PerturbationSpec, TdeptError};
use crate::basis::ProfileConfig;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExactMethod {
    /// Matrix exponential; only for time-independent perturbations.
    MatrixExponential,
    /// Classical fourth-order Runge-Kutta with a fixed number of steps.
    RungeKutta { steps: usize },
    /// Exponential when possible, otherwise Runge-Kutta with a step chosen
    /// from the largest frequency.
    Auto,
}

/// Amplitudes `C_n(t)` of all states, starting from `C = e_i` at `t = 0`.
pub fn exact_amplitudes(
    spec: &PerturbationSpec,
    i: usize,
    t: f64,
    method: ExactMethod,
) -> Result<DVector<Complex64>, TdeptError> {
    spec.check_state(i)?;
    if !(t >= 0.0) || !t.is_finite() {
        return Err(TdeptError::InvalidArgument(format!(
            "time must be finite and >= 0, got {t}"
        )));
    }
    let n = spec.dimension();
    let constant = matches!(spec.separable(), Some((_, ProfileConfig::Constant)));
    let method = match method {
        ExactMethod::Auto if constant => ExactMethod::MatrixExponential,
        ExactMethod::Auto => {
            let steps = (400.0 * t * (spec.max_frequency() + 1.0))
                .ceil()
                .max(2000.0) as usize;
            ExactMethod::RungeKutta { steps }
        }
        m => m,
    };
    let mut c0 = DVector::zeros(n);
    c0[i] = Complex64::new(1.0, 0.0);
    match method {
        ExactMethod::MatrixExponential => {
            let (v, _) = spec
                .separable()
                .filter(|(_, p)| *p == ProfileConfig::Constant)
                .ok_or_else(|| {
                    TdeptError::InvalidArgument(
                        "matrix exponential needs a time-independent perturbation".into(),
                    )
                })?;
            let h = DMatrix::from_fn(n, n, |a, b| {
                let diag = if a == b { spec.energies()[a] } else { 0.0 };
                Complex64::new(diag, 0.0) + v[(a, b)] * spec.link_factor(a)
            });
            let u = (h * Complex64::new(0.0, -t)).exp();
            let a = u * c0;
            Ok(DVector::from_fn(n, |k, _| {
                a[k] * Complex64::from_polar(1.0, spec.energies()[k] * t)
            }))
        }
        ExactMethod::RungeKutta { steps } => {
            let steps = steps.max(1);
            let h = t / steps as f64;
            let rhs = |s: f64, c: &DVector<Complex64>| -> DVector<Complex64> {
                DVector::from_fn(n, |a, _| {
                    let sum: Complex64 = (0..n).map(|b| spec.w_element(a, b, s) * c[b]).sum();
                    Complex64::new(0.0, -spec.link_factor(a)) * sum
                })
            };
            let mut c = c0;
            for k in 0..steps {
                let s = k as f64 * h;
                let k1 = rhs(s, &c);
                let k2 = rhs(s + 0.5 * h, &(&c + &k1 * Complex64::new(0.5 * h, 0.0)));
                let k3 = rhs(s + 0.5 * h, &(&c + &k2 * Complex64::new(0.5 * h, 0.0)));
                let k4 = rhs(s + h, &(&c + &k3 * Complex64::new(h, 0.0)));
                c += (k1 + k2 * Complex64::new(2.0, 0.0) + k3 * Complex64::new(2.0, 0.0) + k4)
                    * Complex64::new(h / 6.0, 0.0);
            }
            Ok(c)
        }
        ExactMethod::Auto => unreachable!("resolved above"),
    }
}
