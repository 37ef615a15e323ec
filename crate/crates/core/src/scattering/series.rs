//! On-shell S-matrix coefficients and the perturbation series of `T`.

use num_complex::Complex64;

use super::{ScatteringError, ScatteringToy};
use crate::tolerances::{DEFAULT_ETA, SINGULAR_DENOMINATOR};

/// How each order of the series is weighted by `c = f₀²/P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
pub enum SeriesPrefactor {
    /// Order `k` carries `c^k` (term-by-term expansion of the S-matrix).
    PowerPerOrder,
    /// Every order carries a single `c`, the expansion of
    /// `T = V^N + V^N c⁻¹ G₀ T`.
    #[default]
    Renormalized,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOptions {
    pub eta: f64,
    pub prefactor: SeriesPrefactor,
    /// Energy of the resolvents; defaults to the initial-state energy.
    pub energy: Option<f64>,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        Self {
            eta: DEFAULT_ETA,
            prefactor: SeriesPrefactor::default(),
            energy: None,
        }
    }
}

/// `⟨Ψ_f⁰|T|Φ_i^{0(0)}⟩` truncated at `order` (`None` for a non-perturbative value).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TMatrixElement {
    pub value: Complex64,
    pub order: Option<usize>,
    pub bra: usize,
    pub ket: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TSeries {
    pub element: TMatrixElement,
    /// `terms[k - 1]` is the order-`k` contribution.
    pub terms: Vec<Complex64>,
    pub partial_sums: Vec<Complex64>,
    /// Set when the last orders grow or stop being finite.
    pub diverging: bool,
}

fn resolvent_diagonal(
    toy: &ScatteringToy,
    energy: f64,
    eta: f64,
    numerator_at: impl Fn(usize) -> bool,
) -> Result<Vec<Complex64>, ScatteringError> {
    if !(eta >= 0.0) {
        return Err(ScatteringError::InvalidArgument(format!(
            "eta must be nonnegative, got {eta}"
        )));
    }
    toy.energies
        .iter()
        .enumerate()
        .map(|(n, &e)| {
            let d = energy - e;
            if eta == 0.0 && d.abs() < SINGULAR_DENOMINATOR {
                if numerator_at(n) {
                    return Err(ScatteringError::RegularizationRequired {
                        state: n,
                        denominator: d,
                    });
                }
                return Ok(Complex64::new(0.0, 0.0));
            }
            Ok(Complex64::new(d, eta).inv())
        })
        .collect()
}

/// Order contributions of the T-matrix series without prefactors:
/// `term_k = Σ V_{f n₁} g_{n₁} V_{n₁ n₂} ... g_{n_{k-1}} V_{n_{k-1} i}`.
fn bare_terms(
    toy: &ScatteringToy,
    f: usize,
    i: usize,
    order: usize,
    energy: f64,
    eta: f64,
) -> Result<Vec<Complex64>, ScatteringError> {
    let n = toy.dimension();
    let g = resolvent_diagonal(toy, energy, eta, |m| {
        // A degenerate intermediate state only matters when it is linked.
        (0..n).any(|a| toy.v[(a, m)].norm() > 0.0) && (0..n).any(|b| toy.v[(m, b)].norm() > 0.0)
    })?;
    // Propagate the ket column: x_k = (V G)^{k-1} V e_i.
    let mut x = toy.v.column(i).into_owned();
    let mut terms = Vec::with_capacity(order);
    for k in 1..=order {
        terms.push(x[f]);
        if k < order {
            let gx = x.component_mul(&nalgebra::DVector::from_vec(g.clone()));
            x = &toy.v * gx;
        }
    }
    Ok(terms)
}

/// Coefficient of `-2πi δ(E_f - E_i)` in the order-`order` S-matrix element.
///
/// Order 1 is `c V_{fi}`, order 2 is `c² Σ_n V_{fn} V_{ni}/(E_i - E_n + iη)`.
pub fn s_matrix_element(
    toy: &ScatteringToy,
    order: usize,
    f: usize,
    i: usize,
    eta: f64,
) -> Result<Complex64, ScatteringError> {
    toy.check_state(f)?;
    toy.check_state(i)?;
    if !(1..=2).contains(&order) {
        return Err(ScatteringError::InvalidArgument(format!(
            "S-matrix orders 1 and 2 are available, got {order}"
        )));
    }
    let c = toy.renormalization;
    if order == 1 {
        return Ok(toy.v[(f, i)] * c);
    }
    let e = toy.energies[i];
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..toy.dimension() {
        let num = toy.v[(f, n)] * toy.v[(n, i)];
        let d = e - toy.energies[n];
        if eta == 0.0 && d.abs() < SINGULAR_DENOMINATOR {
            if num.norm() > 0.0 {
                return Err(ScatteringError::RegularizationRequired {
                    state: n,
                    denominator: d,
                });
            }
            continue;
        }
        sum += num / Complex64::new(d, eta);
    }
    Ok(sum * c * c)
}

/// Partial sums of the T-matrix series through `order`.
pub fn t_matrix_series(
    toy: &ScatteringToy,
    f: usize,
    i: usize,
    order: usize,
    opts: &SeriesOptions,
) -> Result<TSeries, ScatteringError> {
    toy.check_state(f)?;
    toy.check_state(i)?;
    if order == 0 {
        return Err(ScatteringError::InvalidArgument(
            "series order must be at least 1".into(),
        ));
    }
    let energy = opts.energy.unwrap_or(toy.energies[i]);
    let c = toy.renormalization;
    let bare = bare_terms(toy, f, i, order, energy, opts.eta)?;
    let terms: Vec<Complex64> = bare
        .iter()
        .enumerate()
        .map(|(k, t)| match opts.prefactor {
            SeriesPrefactor::PowerPerOrder => t * c.powi(k as i32 + 1),
            SeriesPrefactor::Renormalized => t * c,
        })
        .collect();
    let mut partial_sums = Vec::with_capacity(order);
    let mut acc = Complex64::new(0.0, 0.0);
    for t in &terms {
        acc += t;
        partial_sums.push(acc);
    }
    let m = terms.len();
    let grows = if m >= 3 {
        terms[m - 1].norm() + terms[m - 2].norm() > terms[m - 2].norm() + terms[m - 3].norm()
    } else if m == 2 {
        terms[1].norm() > terms[0].norm()
    } else {
        false
    };
    let diverging = grows || !acc.re.is_finite() || !acc.im.is_finite();
    Ok(TSeries {
        element: TMatrixElement {
            value: acc,
            order: Some(order),
            bra: f,
            ket: i,
        },
        terms,
        partial_sums,
        diverging,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;

    fn toy() -> ScatteringToy {
        let v = DMatrix::from_row_slice(
            3,
            3,
            &[0.0, 0.1, 0.05, 0.1, 0.02, 0.07, 0.05, 0.07, 0.0].map(|x| Complex64::new(x, 0.0)),
        );
        ScatteringToy::new(vec![0.0, 0.5, 1.1], v, 1.2, 2).unwrap()
    }

    #[test]
    fn zero_potential_gives_zero() {
        let mut t = toy();
        t.v.fill(Complex64::new(0.0, 0.0));
        for order in 1..=2 {
            assert_eq!(
                s_matrix_element(&t, order, 1, 0, 1e-6).unwrap(),
                Complex64::new(0.0, 0.0)
            );
        }
    }

    #[test]
    fn first_order_series_is_born_term() {
        let t = toy();
        let s = t_matrix_series(&t, 2, 0, 1, &SeriesOptions::default()).unwrap();
        assert_eq!(
            s.element.value,
            s_matrix_element(&t, 1, 2, 0, 1e-6).unwrap()
        );
    }

    #[test]
    fn power_per_order_second_term_is_second_order_s() {
        let t = toy();
        let opts = SeriesOptions {
            prefactor: SeriesPrefactor::PowerPerOrder,
            ..SeriesOptions::default()
        };
        let s = t_matrix_series(&t, 2, 0, 2, &opts).unwrap();
        let direct = s_matrix_element(&t, 2, 2, 0, opts.eta).unwrap();
        assert!((s.terms[1] - direct).norm() < 1e-12 * direct.norm().max(1.0));
    }

    #[test]
    fn degenerate_linked_state_needs_eta() {
        let t = toy();
        // V_11 V_11 != 0 with E_1 = E_1; V_20 V_00 = 0 leaves state 0 unlinked.
        let err = s_matrix_element(&t, 2, 1, 1, 0.0).unwrap_err();
        assert!(matches!(
            err,
            ScatteringError::RegularizationRequired { state: 1, .. }
        ));
        assert!(s_matrix_element(&t, 2, 2, 0, 0.0).is_ok());
    }
}
