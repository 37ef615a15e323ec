use super::ScatteringError;

/// Two-body channel kinematics in atomic units.
///
/// Energy conservation `k_f²/(2μ_f) + ε_f = k_i²/(2μ_i) + ε_i` fixes `k_f`.
/// Below threshold the channel is closed, `k_f` is set to zero and `open`
/// is false.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ChannelKinematics {
    pub mu_i: f64,
    pub mu_f: f64,
    pub k_i: f64,
    pub k_f: f64,
    pub eps_i: f64,
    pub eps_f: f64,
    pub open: bool,
}

impl ChannelKinematics {
    /// Solves for `k_f`.
    pub fn new(
        mu_i: f64,
        mu_f: f64,
        k_i: f64,
        eps_i: f64,
        eps_f: f64,
    ) -> Result<Self, ScatteringError> {
        if !(mu_i > 0.0 && mu_f > 0.0) {
            return Err(ScatteringError::InvalidArgument(format!(
                "reduced masses must be positive, got {mu_i}, {mu_f}"
            )));
        }
        if !(k_i >= 0.0) || !k_i.is_finite() {
            return Err(ScatteringError::InvalidArgument(format!(
                "k_i must be finite and nonnegative, got {k_i}"
            )));
        }
        let kinetic = eps_i - eps_f + k_i * k_i / (2.0 * mu_i);
        let open = kinetic >= 0.0;
        let k_f = if open {
            (2.0 * mu_f * kinetic).sqrt()
        } else {
            0.0
        };
        Ok(Self {
            mu_i,
            mu_f,
            k_i,
            k_f,
            eps_i,
            eps_f,
            open,
        })
    }

    /// Channel with `k_f` given directly (no internal-energy bookkeeping).
    pub fn with_final_wave_vector(mu_i: f64, mu_f: f64, k_i: f64, k_f: f64) -> Self {
        Self {
            mu_i,
            mu_f,
            k_i,
            k_f,
            eps_i: 0.0,
            eps_f: k_i * k_i / (2.0 * mu_i) - k_f * k_f / (2.0 * mu_f),
            open: true,
        }
    }

    /// Total energy `E_i = k_i²/(2μ_i) + ε_i`.
    pub fn total_energy(&self) -> f64 {
        self.k_i * self.k_i / (2.0 * self.mu_i) + self.eps_i
    }

    /// Final relative kinetic energy from energy conservation; negative for
    /// a closed channel.
    pub fn final_kinetic_energy(&self) -> f64 {
        self.eps_i - self.eps_f + self.k_i * self.k_i / (2.0 * self.mu_i)
    }

    pub fn require_open(&self) -> Result<(), ScatteringError> {
        if self.open {
            Ok(())
        } else {
            Err(ScatteringError::ClosedChannel {
                kinetic: self.final_kinetic_energy(),
            })
        }
    }

    /// Incident flux density `k_i/μ_i`.
    pub fn flux(&self) -> f64 {
        self.k_i / self.mu_i
    }

    /// Energy conservation residual, zero for an on-shell channel.
    pub fn energy_mismatch(&self) -> f64 {
        self.k_f * self.k_f / (2.0 * self.mu_f) + self.eps_f - self.total_energy()
    }
}
