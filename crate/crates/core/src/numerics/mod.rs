//! Numerical building blocks: adaptive quadrature, the spherical Bessel
//! function `j0`, radial Fourier transforms, two-center integrals in prolate
//! spheroidal coordinates, and sequence acceleration.

mod auxiliary;
mod bessel;
mod chebyshev;
mod fourier;
mod quad;
mod spheroidal;
mod wynn;

pub use auxiliary::{aux_a, aux_b, sto_two_center, StoFactor};
pub use bessel::j0;
pub use chebyshev::PiecewiseChebyshev;
pub use fourier::{radial_fourier, RadialOptions};
pub use quad::{
    gauss_legendre, integrate, integrate_semi_infinite, integrate_semi_infinite_with_breaks,
    integrate_with_breaks, QuadOptions, QuadValue, QuadratureResult,
};
pub use spheroidal::{spheroidal_two_center, Center, Weight};
pub use wynn::WynnEpsilon;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("quadrature hit the subdivision cap: best value {value:e}, error estimate {error_estimate:e} after {evaluations} evaluations")]
    MaxSubdivisions {
        value: f64,
        error_estimate: f64,
        evaluations: usize,
    },
    #[error("integrand is not finite at x = {x}")]
    NonFinite { x: f64 },
    #[error("invalid integration interval")]
    InvalidInterval,
    #[error(
        "oscillatory transform did not converge after {panels} panels (last estimate {value:e})"
    )]
    FourierNotConverged { panels: usize, value: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Convenience wrapper: adaptive integral over `[a, b]` with `b = +inf`
/// allowed, using one tolerance for absolute and relative error.
pub fn adaptive_quad<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult, NumericsError>
where
    F: Fn(f64) -> f64,
{
    if tol <= 0.0 || !tol.is_finite() {
        return Err(NumericsError::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let opts = QuadOptions::with_tol(tol);
    if b == f64::INFINITY {
        integrate_semi_infinite(&f, a, &opts)
    } else {
        integrate(&f, a, b, &opts)
    }
}
