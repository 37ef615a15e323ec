//! Radial Fourier transform `4 pi int_0^inf R^2 j0(qR) G(R) dR`.
//!
//! Small `q` goes through the mapped semi-infinite adaptive rule. Larger `q`
//! is split at the zeros of `sin(qR)`; the alternating panel sums are
//! accelerated with the Wynn epsilon algorithm.

use std::f64::consts::PI;

use super::{
    integrate, integrate_semi_infinite_with_breaks, j0, NumericsError, QuadOptions,
    QuadratureResult, WynnEpsilon,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Length scale beyond which `G` is negligible (Bohr). Decides between
    /// the direct and the panel-splitting branch: panels are used once
    /// `q * support > 10`.
    pub support: f64,
    pub max_panels: usize,
    /// Panels summed before acceleration may declare convergence.
    pub min_panels: usize,
}

impl Default for RadialOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-300,
            support: 40.0,
            max_panels: 200_000,
            min_panels: 12,
        }
    }
}

impl RadialOptions {
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        Self {
            rel_tol,
            ..Self::default()
        }
    }
}

const WYNN_WINDOW: usize = 48;

/// Radial transform of a spherically symmetric function.
pub fn radial_fourier<G>(
    g: G,
    q: f64,
    opts: &RadialOptions,
) -> Result<QuadratureResult, NumericsError>
where
    G: Fn(f64) -> f64,
{
    if !(q >= 0.0) || !q.is_finite() {
        return Err(NumericsError::InvalidArgument(format!(
            "momentum transfer must be finite and >= 0, got {q}"
        )));
    }
    if q * opts.support <= 10.0 {
        let integrand = |r: f64| 4.0 * PI * r * r * j0(q * r) * g(r);
        let breaks = [0.25 * opts.support, opts.support];
        let qo = QuadOptions::new(opts.abs_tol, opts.rel_tol);
        return integrate_semi_infinite_with_breaks(&integrand, 0.0, &breaks, &qo);
    }

    // R^2 j0(qR) = R sin(qR) / q
    let integrand = |r: f64| 4.0 * PI * r * (q * r).sin() / q * g(r);
    let width = PI / q;
    let panel_rel = (opts.rel_tol * 1e-2).max(1e-12);
    let scale = width
        * (1..=16)
            .map(|i| integrand(i as f64 * width / 17.0).abs())
            .fold(0.0, f64::max);
    let mut partial: f64 = 0.0;
    let mut total_err = 0.0;
    let mut evaluations = 0;
    let mut wynn = WynnEpsilon::new();
    let mut stable = 0;
    let mut last_estimate = 0.0;
    let mut quiet = 0;
    for n in 0..opts.max_panels {
        let a = n as f64 * width;
        // Panels that nearly cancel only need accuracy relative to the sum so
        // far, or to the size of the integrand on the first panel.
        let panel_opts = QuadOptions::new(
            opts.abs_tol.max(panel_rel * partial.abs().max(scale)),
            panel_rel,
        );
        let res = integrate(&integrand, a, a + width, &panel_opts)?;
        evaluations += res.evaluations;
        total_err += res.error_estimate;
        partial += res.value;
        // The integrand has died out completely: the plain sum is final.
        if res.value.abs() <= 1e-300 {
            quiet += 1;
            if quiet >= 4 && n >= opts.min_panels {
                return Ok(QuadratureResult {
                    value: partial,
                    error_estimate: total_err,
                    evaluations,
                });
            }
        } else {
            quiet = 0;
        }
        if wynn.len() >= WYNN_WINDOW {
            wynn = WynnEpsilon::new();
        }
        let estimate = wynn.push(partial);
        last_estimate = estimate;
        let target = opts.abs_tol.max(opts.rel_tol * estimate.abs());
        let tail_small = res.value.abs() <= 1e-3 * target;
        match wynn.last_change() {
            Some(change) if change <= target => stable += 1,
            _ => stable = 0,
        }
        if n + 1 >= opts.min_panels && (stable >= 3 || tail_small) {
            let value = if tail_small { partial } else { estimate };
            return Ok(QuadratureResult {
                value,
                error_estimate: total_err + wynn.last_change().unwrap_or(0.0),
                evaluations,
            });
        }
    }
    Err(NumericsError::FourierNotConverged {
        panels: opts.max_panels,
        value: last_estimate,
    })
}
