//! Time-dependent amplitudes of invariant exchange perturbation theory
//! (`ħ = 1`).
//!
//! The perturbation enters through the matrix `V_nm(t) = ⟨Ψ_n|V_{p=0}(t)|Φ_m^(0)⟩`
//! and every link of a perturbation chain carries the factor `f²/(iP)`.
//! [`Prefactor`] selects whether `f` is the bra state's own normalization or
//! one global `f_0`.

mod amplitudes;
mod nested;
mod reference;
mod symmetric;

pub use amplitudes::{first_order_amplitude, second_order_amplitude};
pub use nested::{
    nth_order_amplitude, series_amplitude, transition_probability, NestedOptions, NestedSeries,
    SeriesAmplitude,
};
pub use reference::{exact_amplitudes, ExactMethod};
pub use symmetric::time_ordered_symmetric_amplitude;

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::basis::{BasisError, ProfileConfig, ToyConfig};
use crate::numerics::NumericsError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TdeptError {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error("perturbation order {order} exceeds the configured maximum {max}")]
    OrderTooHigh { order: usize, max: usize },
    #[error("state index {index} out of range for {count} states")]
    StateOutOfRange { index: usize, count: usize },
    #[error("perturbation matrix is not hermitian at t = {t} (deviation {deviation:e})")]
    NotHermitian { t: f64, deviation: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// How the link factor `f²/(iP)` chooses its `f`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum Prefactor {
    /// Each link uses the normalization of its bra state, `f_n²/P`.
    BraState,
    /// Every link uses the same `f_0²/P`.
    Global { f0: f64 },
}

type ElementFn = dyn Fn(usize, usize, f64) -> Complex64 + Send + Sync;

/// A perturbation on a finite basis.
#[derive(Clone)]
pub struct PerturbationSpec {
    energies: Vec<f64>,
    normalization: Vec<f64>,
    p_count: usize,
    prefactor: Prefactor,
    element: Arc<ElementFn>,
    /// `V(t) = matrix * profile(t)` when the time dependence factorizes.
    separable: Option<(DMatrix<Complex64>, ProfileConfig)>,
    /// Largest angular frequency in `V(t)` itself, for grid sizing.
    drive_frequency: f64,
}

impl std::fmt::Debug for PerturbationSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PerturbationSpec")
            .field("energies", &self.energies)
            .field("normalization", &self.normalization)
            .field("p_count", &self.p_count)
            .field("prefactor", &self.prefactor)
            .finish_non_exhaustive()
    }
}

impl PerturbationSpec {
    /// `V(t) = matrix * profile(t)`.
    pub fn from_matrix(
        energies: Vec<f64>,
        normalization: Vec<f64>,
        p_count: usize,
        matrix: DMatrix<Complex64>,
        profile: ProfileConfig,
    ) -> Result<Self, TdeptError> {
        let n = energies.len();
        if matrix.nrows() != n || matrix.ncols() != n || normalization.len() != n {
            return Err(TdeptError::InvalidArgument(format!(
                "need {n} energies, {n} normalizations and an {n}x{n} matrix"
            )));
        }
        if p_count == 0 {
            return Err(TdeptError::InvalidArgument("P must be at least 1".into()));
        }
        if let Some(k) = normalization
            .iter()
            .position(|f| *f == 0.0 || !f.is_finite())
        {
            return Err(BasisError::ZeroNormalization { state: k }.into());
        }
        let drive_frequency = match profile {
            ProfileConfig::Constant => 0.0,
            ProfileConfig::Gaussian { width, .. } => 6.0 / width.abs(),
            ProfileConfig::Harmonic { omega } => omega.abs(),
        };
        let m = matrix.clone();
        let prof = profile.clone();
        let element = Arc::new(move |a: usize, b: usize, t: f64| m[(a, b)] * prof.value(t));
        Ok(Self {
            energies,
            normalization,
            p_count,
            prefactor: Prefactor::BraState,
            element,
            separable: Some((matrix, profile)),
            drive_frequency,
        })
    }

    /// General time dependence through a matrix-element function.
    /// `drive_frequency` bounds the angular frequencies present in `V(t)`.
    pub fn from_fn<F>(
        energies: Vec<f64>,
        normalization: Vec<f64>,
        p_count: usize,
        drive_frequency: f64,
        element: F,
    ) -> Result<Self, TdeptError>
    where
        F: Fn(usize, usize, f64) -> Complex64 + Send + Sync + 'static,
    {
        if normalization.len() != energies.len() || p_count == 0 {
            return Err(TdeptError::InvalidArgument(
                "inconsistent dimensions or P = 0".into(),
            ));
        }
        Ok(Self {
            energies,
            normalization,
            p_count,
            prefactor: Prefactor::BraState,
            element: Arc::new(element),
            separable: None,
            drive_frequency: drive_frequency.abs(),
        })
    }

    /// Build from a toy configuration; the matrix must be hermitian.
    pub fn from_toy(cfg: &ToyConfig) -> Result<Self, TdeptError> {
        cfg.validate()?;
        let n = cfg.dimension();
        let matrix = DMatrix::from_fn(n, n, |a, b| {
            let im = cfg.v_im.as_ref().map_or(0.0, |m| m[a][b]);
            Complex64::new(cfg.v_re[a][b], im) * cfg.coupling
        });
        let spec = Self::from_matrix(
            cfg.energies.clone(),
            cfg.normalizations(),
            cfg.p_count,
            matrix,
            cfg.profile.clone(),
        )?;
        spec.check_hermitian(0.0, 1e-12)?;
        Ok(spec)
    }

    pub fn with_prefactor(mut self, prefactor: Prefactor) -> Self {
        self.prefactor = prefactor;
        self
    }

    /// Same perturbation scaled by `eps`.
    pub fn scaled(&self, eps: f64) -> Self {
        let inner = self.element.clone();
        let mut out = self.clone();
        out.element = Arc::new(move |a, b, t| inner(a, b, t) * eps);
        out.separable = self
            .separable
            .as_ref()
            .map(|(m, p)| (m * Complex64::new(eps, 0.0), p.clone()));
        out
    }

    pub fn dimension(&self) -> usize {
        self.energies.len()
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn normalization(&self) -> &[f64] {
        &self.normalization
    }

    pub fn p_count(&self) -> usize {
        self.p_count
    }

    pub fn prefactor(&self) -> Prefactor {
        self.prefactor
    }

    pub(crate) fn separable(&self) -> Option<&(DMatrix<Complex64>, ProfileConfig)> {
        self.separable.as_ref()
    }

    /// `V_nm(t)` in the Schrödinger picture.
    pub fn element(&self, n: usize, m: usize, t: f64) -> Complex64 {
        (self.element)(n, m, t)
    }

    /// Link factor `f²/P` for bra state `n` (without the `1/i`).
    pub fn link_factor(&self, n: usize) -> f64 {
        let f = match self.prefactor {
            Prefactor::BraState => self.normalization[n],
            Prefactor::Global { f0 } => f0,
        };
        f * f / self.p_count as f64
    }

    /// Largest angular frequency present in `W(t)`.
    pub fn max_frequency(&self) -> f64 {
        let emax = self
            .energies
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max);
        let emin = self.energies.iter().cloned().fold(f64::INFINITY, f64::min);
        (emax - emin) + self.drive_frequency
    }

    /// `W_nm(t) = exp(i ω_nm t) V_nm(t)`.
    pub fn w_element(&self, n: usize, m: usize, t: f64) -> Complex64 {
        let w = self.energies[n] - self.energies[m];
        Complex64::from_polar(1.0, w * t) * self.element(n, m, t)
    }

    pub(crate) fn check_state(&self, n: usize) -> Result<(), TdeptError> {
        if n >= self.dimension() {
            return Err(TdeptError::StateOutOfRange {
                index: n,
                count: self.dimension(),
            });
        }
        Ok(())
    }

    /// Error unless `V(t)` is hermitian to `tol` (relative to its largest entry).
    pub fn check_hermitian(&self, t: f64, tol: f64) -> Result<(), TdeptError> {
        let n = self.dimension();
        let mut scale: f64 = 0.0;
        let mut dev: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                let x = self.element(a, b, t);
                scale = scale.max(x.norm());
                dev = dev.max((x - self.element(b, a, t).conj()).norm());
            }
        }
        if dev > tol * scale.max(1e-300) {
            return Err(TdeptError::NotHermitian { t, deviation: dev });
        }
        Ok(())
    }
}

/// Interaction-picture matrix `W(t)` with entries `exp(i ω_nm t) V_nm(t)`.
pub fn interaction_picture_w(spec: &PerturbationSpec, t: f64) -> DMatrix<Complex64> {
    let n = spec.dimension();
    DMatrix::from_fn(n, n, |a, b| spec.w_element(a, b, t))
}

/// Amplitudes of every state on a time grid for one perturbative order.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct AmplitudeTable {
    pub order: usize,
    pub initial: usize,
    pub times: Vec<f64>,
    /// `values[k][n]`: amplitude of state `n` at `times[k]`.
    pub values: Vec<Vec<Complex64>>,
}
