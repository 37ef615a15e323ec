//! Arbitrary-order amplitudes from the nested (time-ordered) form.
//!
//! Order `k` obeys `y_n^(k)(t) = (f_n²/(iP)) ∫_0^t Σ_m W_nm(t') y_m^(k-1)(t') dt'`
//! with `y^(0) = e_i`. Each order is kept as a piecewise Chebyshev
//! interpolant, so the innermost integral is reused by all outer ones.

use num_complex::Complex64;

use super::{PerturbationSpec, TdeptError};
use crate::numerics::PiecewiseChebyshev;

const MINUS_I: Complex64 = Complex64::new(0.0, -1.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NestedOptions {
    /// Chebyshev degree per panel.
    pub degree: usize,
    /// Panel count; chosen from the largest frequency when `None`.
    pub panels: Option<usize>,
    /// Highest order that may be requested.
    pub max_order: usize,
}

impl Default for NestedOptions {
    fn default() -> Self {
        Self {
            degree: crate::tolerances::CHEBYSHEV_DEGREE,
            panels: None,
            max_order: crate::tolerances::DEFAULT_MAX_ORDER,
        }
    }
}

/// All orders `1..=order` of the amplitudes out of one initial state on `[0, t_max]`.
#[derive(Debug, Clone)]
pub struct NestedSeries {
    initial: usize,
    dimension: usize,
    t_max: f64,
    /// `orders[k-1][n]` interpolates `C_n^(k)` on `[0, t_max]`.
    orders: Vec<Vec<PiecewiseChebyshev>>,
}

impl NestedSeries {
    pub fn compute(
        spec: &PerturbationSpec,
        initial: usize,
        order: usize,
        t_max: f64,
        opts: &NestedOptions,
    ) -> Result<Self, TdeptError> {
        spec.check_state(initial)?;
        if order > opts.max_order {
            return Err(TdeptError::OrderTooHigh {
                order,
                max: opts.max_order,
            });
        }
        if !(t_max >= 0.0) || !t_max.is_finite() {
            return Err(TdeptError::InvalidArgument(format!(
                "time must be finite and >= 0, got {t_max}"
            )));
        }
        let dim = spec.dimension();
        let span = t_max.max(f64::MIN_POSITIVE);
        let panels = opts.panels.unwrap_or_else(|| {
            ((span * (spec.max_frequency() + 1.0) / 6.0).ceil() as usize).clamp(1, 100_000)
        });
        let mut orders: Vec<Vec<PiecewiseChebyshev>> = Vec::with_capacity(order);
        for k in 1..=order {
            let mut level = Vec::with_capacity(dim);
            for n in 0..dim {
                let c = MINUS_I * spec.link_factor(n);
                let integrand = |t: f64| -> Complex64 {
                    if k == 1 {
                        c * spec.w_element(n, initial, t)
                    } else {
                        let prev = &orders[k - 2];
                        let mut s = Complex64::new(0.0, 0.0);
                        for (m, y) in prev.iter().enumerate() {
                            s += spec.w_element(n, m, t) * y.eval(t);
                        }
                        c * s
                    }
                };
                level.push(
                    PiecewiseChebyshev::sample(integrand, 0.0, span, panels, opts.degree)
                        .antiderivative(),
                );
            }
            orders.push(level);
        }
        Ok(Self {
            initial,
            dimension: dim,
            t_max,
            orders,
        })
    }

    pub fn max_order(&self) -> usize {
        self.orders.len()
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    /// `C_n^(k)(t)`; order 0 is the overlap term `δ_ni` of the truncated model.
    pub fn amplitude(&self, order: usize, n: usize, t: f64) -> Complex64 {
        if order == 0 {
            return if n == self.initial {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
        }
        if t == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        self.orders[order - 1][n].eval(t)
    }

    /// Partial sum through every computed order.
    pub fn series(&self, n: usize, t: f64) -> SeriesAmplitude {
        let terms: Vec<Complex64> = (0..=self.max_order())
            .map(|k| self.amplitude(k, n, t))
            .collect();
        SeriesAmplitude::from_terms(terms)
    }

    /// One order of every state on `times`, which must lie in `[0, t_max]`.
    pub fn table(&self, order: usize, times: &[f64]) -> Result<super::AmplitudeTable, TdeptError> {
        if order > self.max_order() {
            return Err(TdeptError::OrderTooHigh {
                order,
                max: self.max_order(),
            });
        }
        if let Some(t) = times.iter().find(|&&t| !(0.0..=self.t_max).contains(&t)) {
            return Err(TdeptError::InvalidArgument(format!(
                "time {t} outside [0, {}]",
                self.t_max
            )));
        }
        let values = times
            .iter()
            .map(|&t| {
                (0..self.dimension)
                    .map(|n| self.amplitude(order, n, t))
                    .collect()
            })
            .collect();
        Ok(super::AmplitudeTable {
            order,
            initial: self.initial,
            times: times.to_vec(),
            values,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }
}

/// Truncated series `Σ_{k<=N} C_f^(k)(t)` with its individual terms.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SeriesAmplitude {
    pub value: Complex64,
    /// `terms[k]` is the order-`k` contribution; `terms[0]` the overlap term.
    pub terms: Vec<Complex64>,
    /// False when the last two orders together outweigh the two before them.
    /// Pairs are compared so that parity selection rules (odd orders vanishing
    /// for some final states) do not trigger the flag.
    pub converging: bool,
}

impl SeriesAmplitude {
    pub fn from_terms(terms: Vec<Complex64>) -> Self {
        let value = terms.iter().sum();
        let n = terms.len();
        let converging = if n >= 4 {
            let last = terms[n - 1].norm() + terms[n - 2].norm();
            let prev = terms[n - 2].norm() + terms[n - 3].norm();
            last <= prev || last < 1e-300
        } else if n == 3 {
            terms[2].norm() <= terms[1].norm() || terms[2].norm() < 1e-300
        } else {
            true
        };
        Self {
            value,
            terms,
            converging,
        }
    }
}

/// `C_n^(k)(t)` from the nested form.
pub fn nth_order_amplitude(
    spec: &PerturbationSpec,
    n: usize,
    i: usize,
    order: usize,
    t: f64,
    opts: &NestedOptions,
) -> Result<Complex64, TdeptError> {
    spec.check_state(n)?;
    let series = NestedSeries::compute(spec, i, order, t, opts)?;
    Ok(series.amplitude(order, n, t))
}

/// Truncated series amplitude of final state `f` through order `max_order`.
pub fn series_amplitude(
    spec: &PerturbationSpec,
    f: usize,
    i: usize,
    t: f64,
    max_order: usize,
    opts: &NestedOptions,
) -> Result<SeriesAmplitude, TdeptError> {
    spec.check_state(f)?;
    let series = NestedSeries::compute(spec, i, max_order, t, opts)?;
    Ok(series.series(f, t))
}

/// `|Σ_{k<=N} C_f^(k)(t)|²`.
pub fn transition_probability(
    spec: &PerturbationSpec,
    f: usize,
    i: usize,
    t: f64,
    max_order: usize,
    opts: &NestedOptions,
) -> Result<f64, TdeptError> {
    Ok(series_amplitude(spec, f, i, t, max_order, opts)?
        .value
        .norm_sqr())
}
