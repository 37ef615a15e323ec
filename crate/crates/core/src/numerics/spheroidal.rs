//! Two-center integrals by direct quadrature in prolate spheroidal
//! coordinates. This is the reference path used to validate closed forms.

use super::{integrate, integrate_semi_infinite, NumericsError, QuadOptions, QuadratureResult};

/// Which nucleus an orbital is centered on. A is the proton, B the other
/// nucleus, separated by `R` along the axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Center {
    A,
    B,
}

/// Extra one-electron weight in the integrand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Weight {
    Unity,
    InverseRA,
    InverseRB,
}

/// `int f(r_f) g(r_g) w d^3r` for two spherically symmetric functions, each
/// given as a function of the distance to its own center.
///
/// Uses `r_A = (R/2)(xi+eta)`, `r_B = (R/2)(xi-eta)` and volume element
/// `2 pi (R/2)^3 (xi^2 - eta^2) d xi d eta`, with the `1/r` weights folded
/// into the Jacobian analytically.
pub fn spheroidal_two_center<F, G>(
    f: F,
    center_f: Center,
    g: G,
    center_g: Center,
    weight: Weight,
    r: f64,
    tol: f64,
) -> Result<QuadratureResult, NumericsError>
where
    F: Fn(f64) -> f64 + Sync,
    G: Fn(f64) -> f64 + Sync,
{
    if !(r > 0.0) || !r.is_finite() {
        return Err(NumericsError::InvalidArgument(format!(
            "separation must be positive, got {r}"
        )));
    }
    let half = 0.5 * r;
    let pick = |c: Center, ra: f64, rb: f64| match c {
        Center::A => ra,
        Center::B => rb,
    };
    let inner_opts = QuadOptions::new(tol * 1e-3, tol * 1e-2);
    let inner_err = std::cell::Cell::new(0.0f64);
    let inner_evals = std::cell::Cell::new(0usize);
    let failure: std::cell::RefCell<Option<NumericsError>> = std::cell::RefCell::new(None);
    let outer = |xi: f64| -> f64 {
        let integrand = |eta: f64| {
            let ra = half * (xi + eta);
            let rb = half * (xi - eta);
            let jac = match weight {
                Weight::Unity => half * half * half * (xi * xi - eta * eta),
                Weight::InverseRA => half * half * (xi - eta),
                Weight::InverseRB => half * half * (xi + eta),
            };
            f(pick(center_f, ra, rb)) * g(pick(center_g, ra, rb)) * jac
        };
        match integrate(&integrand, -1.0, 1.0, &inner_opts) {
            Ok(res) => {
                inner_err.set(inner_err.get() + res.error_estimate);
                inner_evals.set(inner_evals.get() + res.evaluations);
                res.value
            }
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                0.0
            }
        }
    };
    let res = integrate_semi_infinite(&outer, 1.0, &QuadOptions::new(tol * 1e-2, tol))?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let scale = 2.0 * std::f64::consts::PI;
    Ok(QuadratureResult {
        value: scale * res.value,
        error_estimate: scale * res.error_estimate,
        evaluations: res.evaluations + inner_evals.get(),
    })
}
