//! S-matrix and T-matrix elements of the exchange-renormalized perturbation,
//! transition rates and cross-sections.
//!
//! All on-shell quantities return the coefficient of the energy delta; the
//! delta itself is never represented numerically.

mod kinematics;
mod operator;
mod rates;
mod series;

pub use kinematics::ChannelKinematics;
pub use operator::{t_operator_solve, ResolventMode, SolveMethod, TOperator};
pub use rates::{
    cross_section_from_rate, density_of_states, differential_cross_section, transition_rate,
    TransitionRate,
};
pub use series::{
    s_matrix_element, t_matrix_series, SeriesOptions, SeriesPrefactor, TMatrixElement, TSeries,
};

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::basis::ToyConfig;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScatteringError {
    #[error("energy denominator {denominator:e} vanishes for intermediate state {state}; a positive eta is required")]
    RegularizationRequired { state: usize, denominator: f64 },
    #[error("linear system is singular (condition estimate {condition:e})")]
    Singular { condition: f64 },
    #[error("successive approximations did not converge after {iterations} iterations (last change {change:e})")]
    NotConverged { iterations: usize, change: f64 },
    #[error("incident wave vector is zero: the flux is undefined")]
    UndefinedFlux,
    #[error("channel is closed: final kinetic energy {kinetic:e} is negative")]
    ClosedChannel { kinetic: f64 },
    #[error("state index {index} out of range for {count} states")]
    StateOutOfRange { index: usize, count: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Finite matrix model of a collision system.
///
/// `energies[n]` are the eigenvalues of the unsymmetrized zero-order
/// Hamiltonian, `v[(n, m)] = ⟨Ψ_n⁰|V₀|Φ_m^{0(0)}⟩`, and `renormalization`
/// is `f₀²/P`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScatteringToy {
    pub energies: Vec<f64>,
    pub v: DMatrix<Complex64>,
    pub renormalization: f64,
}

impl ScatteringToy {
    pub fn new(
        energies: Vec<f64>,
        v: DMatrix<Complex64>,
        f0: f64,
        p_count: usize,
    ) -> Result<Self, ScatteringError> {
        let n = energies.len();
        if v.nrows() != n || v.ncols() != n {
            return Err(ScatteringError::InvalidArgument(format!(
                "V must be {n}x{n}, got {}x{}",
                v.nrows(),
                v.ncols()
            )));
        }
        if p_count == 0 || !f0.is_finite() || f0 == 0.0 {
            return Err(ScatteringError::InvalidArgument(format!(
                "need f0 != 0 and P >= 1, got f0 = {f0}, P = {p_count}"
            )));
        }
        Ok(Self {
            energies,
            v,
            renormalization: f0 * f0 / p_count as f64,
        })
    }

    /// Exchange-free model: `f₀²/P = 1`.
    pub fn exchange_off(
        energies: Vec<f64>,
        v: DMatrix<Complex64>,
    ) -> Result<Self, ScatteringError> {
        Self::new(energies, v, 1.0, 1)
    }

    /// Builds the model from a toy configuration. `f₀` is the normalization
    /// of the initial state and the coupling scale multiplies `V`.
    pub fn from_toy(cfg: &ToyConfig) -> Result<Self, ScatteringError> {
        cfg.validate()
            .map_err(|e| ScatteringError::InvalidArgument(e.to_string()))?;
        let n = cfg.dimension();
        let v = DMatrix::from_fn(n, n, |a, b| {
            let im = cfg.v_im.as_ref().map_or(0.0, |m| m[a][b]);
            Complex64::new(cfg.v_re[a][b], im) * cfg.coupling
        });
        let f0 = cfg.normalizations()[cfg.initial];
        Self::new(cfg.energies.clone(), v, f0, cfg.p_count)
    }

    pub fn dimension(&self) -> usize {
        self.energies.len()
    }

    /// `V₀^N = (f₀²/P) V₀`.
    pub fn renormalized_v(&self) -> DMatrix<Complex64> {
        &self.v * Complex64::new(self.renormalization, 0.0)
    }

    pub(crate) fn check_state(&self, n: usize) -> Result<(), ScatteringError> {
        if n >= self.energies.len() {
            return Err(ScatteringError::StateOutOfRange {
                index: n,
                count: self.energies.len(),
            });
        }
        Ok(())
    }
}
