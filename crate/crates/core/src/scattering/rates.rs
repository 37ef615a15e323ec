use std::f64::consts::PI;

use num_complex::Complex64;

use super::{ChannelKinematics, ScatteringError};

/// Transition probability per unit time.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct TransitionRate {
    pub value: f64,
    /// The final channel is energetically closed; `value` is then zero.
    pub closed: bool,
}

/// `w = 2π |T|² ρ(E_f)`. With `kinematics = None` the final state is
/// treated as open.
pub fn transition_rate(
    t: Complex64,
    kinematics: Option<&ChannelKinematics>,
    density: f64,
) -> TransitionRate {
    if let Some(k) = kinematics {
        if !k.open {
            return TransitionRate {
                value: 0.0,
                closed: true,
            };
        }
    }
    TransitionRate {
        value: 2.0 * PI * t.norm_sqr() * density,
        closed: false,
    }
}

/// Final-state density per unit energy and solid angle, `μ_f k_f/(2π)³`.
pub fn density_of_states(kinematics: &ChannelKinematics) -> f64 {
    kinematics.mu_f * kinematics.k_f / (2.0 * PI).powi(3)
}

/// `dσ/dΩ = μ_i μ_f k_f |T|² / ((2π)² k_i)` in bohr² per steradian.
pub fn differential_cross_section(
    t: Complex64,
    kinematics: &ChannelKinematics,
) -> Result<f64, ScatteringError> {
    if kinematics.k_i == 0.0 {
        return Err(ScatteringError::UndefinedFlux);
    }
    kinematics.require_open()?;
    Ok(
        kinematics.mu_i * kinematics.mu_f * kinematics.k_f * t.norm_sqr()
            / ((2.0 * PI).powi(2) * kinematics.k_i),
    )
}

/// `σ = w / j` with the incident flux `j = k_i/μ_i`.
pub fn cross_section_from_rate(
    rate: &TransitionRate,
    kinematics: &ChannelKinematics,
) -> Result<f64, ScatteringError> {
    if kinematics.k_i == 0.0 {
        return Err(ScatteringError::UndefinedFlux);
    }
    Ok(rate.value / kinematics.flux())
}
