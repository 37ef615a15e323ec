//! Plain-text (TOML) description of a finite toy model.
//!
//! ```toml
//! energies = [0.0, 0.7]          # unperturbed energies E_n (hartree)
//! p_count = 2                    # number of inter-center permutations P
//! exchange_overlaps = [0.3, 0.3] # S_n of each state with its exchanged copy
//! normalization = [1.2, 0.9]     # optional f_n^P; default from the overlaps
//! v_re = [[0.0, 1.0], [1.0, 0.0]]  # Re <Ψ_n|V_{p=0}|Φ_m^(0)>
//! v_im = [[0.0, 0.0], [0.0, 0.0]]  # optional imaginary part
//! coupling = 0.05                # scale ε multiplying V
//! initial = 0
//!
//! [profile]                      # time dependence of V
//! kind = "constant"              # or "gaussian" (center, width), "harmonic" (omega)
//!
//! [run]
//! t_max = 10.0
//! steps = 11
//! max_order = 4
//! ```

use serde::{Deserialize, Serialize};

use super::BasisError;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ProfileConfig {
    #[default]
    Constant,
    Gaussian {
        center: f64,
        width: f64,
    },
    Harmonic {
        omega: f64,
    },
}

impl ProfileConfig {
    pub fn value(&self, t: f64) -> f64 {
        match *self {
            Self::Constant => 1.0,
            Self::Gaussian { center, width } => (-((t - center) / width).powi(2)).exp(),
            Self::Harmonic { omega } => (omega * t).cos(),
        }
    }
}

/// Time grid and expansion settings of a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "default_t_max")]
    pub t_max: f64,
    #[serde(default = "default_steps")]
    pub steps: usize,
    #[serde(default)]
    pub times: Option<Vec<f64>>,
    #[serde(default = "default_max_order")]
    pub max_order: usize,
    #[serde(default = "default_tol")]
    pub tol: f64,
}

fn default_t_max() -> f64 {
    10.0
}
fn default_steps() -> usize {
    11
}
fn default_max_order() -> usize {
    crate::tolerances::DEFAULT_MAX_ORDER
}
fn default_tol() -> f64 {
    crate::tolerances::QUAD_TOL
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            t_max: default_t_max(),
            steps: default_steps(),
            times: None,
            max_order: default_max_order(),
            tol: default_tol(),
        }
    }
}

impl RunConfig {
    /// Time grid: explicit `times` or `steps` equally spaced points on `[0, t_max]`.
    pub fn time_grid(&self) -> Vec<f64> {
        if let Some(t) = &self.times {
            return t.clone();
        }
        let steps = self.steps.max(2);
        (0..steps)
            .map(|k| self.t_max * k as f64 / (steps - 1) as f64)
            .collect()
    }

    pub fn validate(&self) -> Result<(), BasisError> {
        let grid = self.time_grid();
        if grid.iter().any(|t| !t.is_finite() || *t < 0.0) || grid.windows(2).any(|w| w[1] <= w[0])
        {
            return Err(BasisError::Config(
                "time grid must be finite, non-negative and strictly increasing".into(),
            ));
        }
        if !(self.tol > 0.0) {
            return Err(BasisError::Config("tolerance must be positive".into()));
        }
        if self.max_order == 0 {
            return Err(BasisError::Config("max_order must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToyConfig {
    pub energies: Vec<f64>,
    #[serde(default = "one")]
    pub p_count: usize,
    #[serde(default)]
    pub exchange_overlaps: Option<Vec<f64>>,
    #[serde(default)]
    pub normalization: Option<Vec<f64>>,
    pub v_re: Vec<Vec<f64>>,
    #[serde(default)]
    pub v_im: Option<Vec<Vec<f64>>>,
    #[serde(default = "one_f")]
    pub coupling: f64,
    #[serde(default)]
    pub initial: usize,
    #[serde(default)]
    pub profile: ProfileConfig,
    #[serde(default)]
    pub run: RunConfig,
}

fn one() -> usize {
    1
}
fn one_f() -> f64 {
    1.0
}

impl ToyConfig {
    pub fn from_toml(text: &str) -> Result<Self, BasisError> {
        let cfg: Self = toml::from_str(text).map_err(|e| BasisError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn dimension(&self) -> usize {
        self.energies.len()
    }

    pub fn validate(&self) -> Result<(), BasisError> {
        let n = self.dimension();
        if n == 0 {
            return Err(BasisError::Config("at least one state is required".into()));
        }
        if self.p_count == 0 {
            return Err(BasisError::Config("p_count must be at least 1".into()));
        }
        let square = |m: &Vec<Vec<f64>>, name: &str| -> Result<(), BasisError> {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(BasisError::Config(format!(
                    "{name} must be a {n}x{n} matrix"
                )));
            }
            Ok(())
        };
        square(&self.v_re, "v_re")?;
        if let Some(im) = &self.v_im {
            square(im, "v_im")?;
        }
        if let Some(s) = &self.exchange_overlaps {
            if s.len() != n {
                return Err(BasisError::Config(format!(
                    "exchange_overlaps needs {n} entries"
                )));
            }
            if self.p_count != 2 {
                return Err(BasisError::Config(
                    "exchange_overlaps describe a single transposition; set p_count = 2".into(),
                ));
            }
        }
        if let Some(f) = &self.normalization {
            if f.len() != n {
                return Err(BasisError::Config(format!(
                    "normalization needs {n} entries"
                )));
            }
            if let Some(k) = f.iter().position(|x| *x == 0.0 || !x.is_finite()) {
                return Err(BasisError::ZeroNormalization { state: k });
            }
        }
        if self.initial >= n {
            return Err(BasisError::StateOutOfRange {
                index: self.initial,
                count: n,
            });
        }
        self.run.validate()
    }

    /// `f_n^P`: explicit values, else `1 - S_n` for a transposition, else 1.
    pub fn normalizations(&self) -> Vec<f64> {
        if let Some(f) = &self.normalization {
            return f.clone();
        }
        if let Some(s) = &self.exchange_overlaps {
            return s.iter().map(|s| 1.0 - s).collect();
        }
        vec![1.0; self.dimension()]
    }

    /// Explicit realization of the basis, when the configuration allows it.
    pub fn basis(&self) -> Result<super::ExchangeBasis, BasisError> {
        match (self.p_count, &self.exchange_overlaps) {
            (1, _) => Ok(super::ExchangeBasis::without_exchange(
                self.energies.clone(),
            )),
            (2, Some(s)) => super::ExchangeBasis::with_transposition(self.energies.clone(), s),
            (2, None) => super::ExchangeBasis::with_transposition(
                self.energies.clone(),
                &vec![0.0; self.dimension()],
            ),
            (p, _) => Err(BasisError::UnsupportedPermutationCount(p)),
        }
    }
}
