//! Numerical tolerances shared across the crate.
//!
//! Acceptance thresholds live next to the tests that use them; the values
//! here steer the algorithms themselves.

/// Default absolute/relative target of the adaptive quadrature driver.
pub const QUAD_TOL: f64 = 1e-10;

/// Subdivision cap of the adaptive driver before it gives up.
pub const MAX_SUBDIVISIONS: usize = 4000;

/// Points mapped beyond this radius contribute nothing.
pub const SEMI_INFINITE_CUTOFF: f64 = 1e12;

/// Integrand magnitudes below this are treated as exactly zero.
pub const NEGLIGIBLE_INTEGRAND: f64 = 1e-300;

/// Below this argument `j0` switches to its Taylor series.
pub const J0_SERIES_SWITCH: f64 = 1e-4;

/// Default `i eta` regularization of resolvent denominators.
pub const DEFAULT_ETA: f64 = 1e-6;

/// Denominators smaller than this count as vanishing when `eta = 0`.
pub const SINGULAR_DENOMINATOR: f64 = 1e-14;

/// Default maximum perturbation order for the time-dependent series.
pub const DEFAULT_MAX_ORDER: usize = 4;

/// Chebyshev degree per panel for nested time integrals.
pub const CHEBYSHEV_DEGREE: usize = 32;

/// Relative distance at which two exponents are considered equal and a
/// closed form with a removable singularity must not be used.
pub const DEGENERATE_EXPONENTS: f64 = 1e-6;
