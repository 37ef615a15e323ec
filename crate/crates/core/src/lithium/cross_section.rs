//! Differential and total cross-sections of the charge-transfer channel.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{LithiumError, LithiumModel, P_COUNT};
use crate::numerics::{integrate, integrate_with_breaks, QuadOptions};
use crate::units::{BOHR_SQUARED_CM2, HARTREE_EV, MU_FINAL, MU_INITIAL, VELOCITY_AU_CM_PER_S};

/// Published total cross-sections `(k [1/bohr], σ [cm²])`.
pub const REFERENCE_TABLE1: [(f64, f64); 16] = [
    (5.0, 2.0e-13),
    (10.0, 1.5e-13),
    (15.0, 7.5e-14),
    (20.0, 5.3e-14),
    (25.0, 4.5e-14),
    (50.0, 2.3e-14),
    (100.0, 1.0e-14),
    (150.0, 7.0e-15),
    (200.0, 6.5e-15),
    (500.0, 2.5e-15),
    (1000.0, 1.0e-15),
    (2000.0, 6.5e-16),
    (3000.0, 4e-16),
    (4000.0, 3.6e-16),
    (5000.0, 3e-16),
    (6000.0, 2e-16),
];

/// Wave vectors whose tabulated σ is checked against the computed one.
pub const TABLE1_ACCEPTANCE_K: [f64; 10] = [
    5.0, 10.0, 15.0, 20.0, 25.0, 50.0, 100.0, 150.0, 200.0, 500.0,
];

const HIGH_K_MIN: f64 = 5.0;
const LOW_K_MAX: f64 = 1.0;

/// One line of the total cross-section table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossSectionRow {
    pub k: f64,
    /// `k²/(2μ_i)` in eV.
    pub e_ev: f64,
    /// `k/μ_i` in cm/s.
    pub v_cm_s: f64,
    pub sigma_au: f64,
    pub sigma_cm2: f64,
    pub branch: SigmaBranch,
}

impl CrossSectionRow {
    pub fn new(k: f64, sigma_au: f64, branch: SigmaBranch) -> Self {
        Self {
            k,
            e_ev: k * k / (2.0 * MU_INITIAL) * HARTREE_EV,
            v_cm_s: k / MU_INITIAL * VELOCITY_AU_CM_PER_S,
            sigma_au,
            sigma_cm2: sigma_au * BOHR_SQUARED_CM2,
            branch,
        }
    }
}

/// Formula used for a total cross-section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SigmaBranch {
    /// Long-wavelength fit, `k < 1`.
    LowkFit,
    /// Angular integration of the Born differential cross-section.
    Direct,
    /// Optical-theorem closed form, `k >= 5`.
    Highk,
}

impl SigmaBranch {
    pub fn label(self) -> &'static str {
        match self {
            SigmaBranch::LowkFit => "lowk-fit",
            SigmaBranch::Direct => "direct",
            SigmaBranch::Highk => "highk",
        }
    }
}

fn check_lowk(k: f64) -> Result<(), LithiumError> {
    if k > 0.0 && k < LOW_K_MAX {
        Ok(())
    } else {
        Err(LithiumError::Domain {
            what: "k",
            value: k,
            domain: "(0, 1)",
        })
    }
}

fn check_highk(k: f64) -> Result<(), LithiumError> {
    if k >= HIGH_K_MIN && k.is_finite() {
        Ok(())
    } else {
        Err(LithiumError::Domain {
            what: "k",
            value: k,
            domain: "[5, inf)",
        })
    }
}

/// Long-wavelength fit of the differential cross-section.
pub fn dcs_lowk_fit(k: f64, theta: f64) -> Result<f64, LithiumError> {
    check_lowk(k)?;
    let ks = k * (theta / 2.0).sin();
    let num = Complex64::new(-9.0, 62.5 * ks - 144.0 * ks.powi(3));
    let den = 1.6f64.powi(2) * (0.6 + 4.0 * k * k).powi(2);
    Ok(1.7e-10 / 0.25e-16 * PI * (num / den + 10.0).norm_sqr())
}

/// Closed-form angular integral of the long-wavelength fit, read as bohr².
pub fn sigma_lowk(k: f64) -> Result<f64, LithiumError> {
    check_lowk(k)?;
    let k2 = k * k;
    let bracket =
        7812.5 * k2 - 18000.0 * k.powi(5) + 20736.0 * k.powi(6) + 4.0 * (6.36 + 102.4 * k2).powi(2);
    Ok(6.8 * PI * bracket / (0.6 + 4.0 * k2).powi(2))
}

/// The long-wavelength fit integrated over the sphere, next to its closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LowKIntegration {
    pub k: f64,
    pub closed_form: f64,
    pub integrated: f64,
    pub ratio: f64,
}

pub fn sigma_lowk_integrated(k: f64) -> Result<LowKIntegration, LithiumError> {
    check_lowk(k)?;
    let closed_form = sigma_lowk(k)?;
    let f = |t: f64| 2.0 * PI * t.sin() * dcs_lowk_fit(k, t).unwrap_or(f64::NAN);
    let integrated = integrate(&f, 0.0, PI, &QuadOptions::with_tol(1e-12))?.value;
    Ok(LowKIntegration {
        k,
        closed_form,
        integrated,
        ratio: integrated / closed_form,
    })
}

/// Imaginary part of the high-energy scattering amplitude, in bohr.
pub fn im_forward_amplitude(k: f64, theta: f64) -> Result<f64, LithiumError> {
    check_highk(k)?;
    let s = (theta / 2.0).sin();
    let ks2 = k * k * s * s;
    let first = ((625.0 + 144.0 * ks2) * (16.0 * ks2 - 2.8 * 2.8) + 151.0 * 22.4 * ks2)
        / (16.0 * ks2 + 2.8 * 2.8);
    let second = 0.9 * ((2.0 * k * s).powi(3) - 486.0 * k * s) / (0.81 + 4.0 * ks2).powi(3);
    Ok(MU_FINAL / (2.0 * PI) * 10.8 / (2.0 * PI.powi(3)) * (first + second))
}

/// High-energy total cross-section `(1/k) μ_f (10.8/π³) 625` in bohr².
pub fn sigma_highk(k: f64) -> Result<f64, LithiumError> {
    check_highk(k)?;
    Ok(MU_FINAL * 10.8 / PI.powi(3) * 625.0 / k)
}

/// `(4π/k) Im f(0)` from [`im_forward_amplitude`].
pub fn sigma_optical(k: f64) -> Result<f64, LithiumError> {
    Ok(4.0 * PI / k * im_forward_amplitude(k, 0.0)?)
}

impl LithiumModel {
    /// Born differential cross-section in cm²/sr for elastic kinematics.
    pub fn dcs(&self, k: f64, theta: f64) -> Result<f64, LithiumError> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(LithiumError::Domain {
                what: "k",
                value: k,
                domain: "(0, inf)",
            });
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(LithiumError::Domain {
                what: "theta",
                value: theta,
                domain: "[0, pi]",
            });
        }
        let q = 2.0 * k * (theta / 2.0).sin();
        let m = self.matrix_element(q)?;
        let f0 = self.f0_used(q);
        let au =
            MU_INITIAL * MU_FINAL / (4.0 * PI * PI) * (f0 * f0 / P_COUNT as f64) * m.norm_sqr();
        Ok(au * BOHR_SQUARED_CM2)
    }

    /// `dσ/dΩ` over a grid, row-major in `ks`.
    pub fn dcs_grid(&self, ks: &[f64], thetas: &[f64]) -> Result<Vec<f64>, LithiumError> {
        let points: Vec<(f64, f64)> = ks
            .iter()
            .flat_map(|&k| thetas.iter().map(move |&t| (k, t)))
            .collect();
        points.par_iter().map(|&(k, t)| self.dcs(k, t)).collect()
    }

    /// `2π ∫ dσ/dΩ sinθ dθ` in bohr².
    pub fn sigma_direct(&self, k: f64) -> Result<f64, LithiumError> {
        let f = |t: f64| 2.0 * PI * t.sin() * self.dcs(k, t).unwrap_or(f64::NAN);
        // Structure sits at q ~ 1, i.e. at θ ~ 1/k.
        let mut breaks = vec![0.0];
        breaks.extend(
            [0.25, 0.5, 1.0, 2.0, 4.0]
                .iter()
                .map(|&q| 2.0 * (q / (2.0 * k)).min(1.0).asin())
                .filter(|&b| b < PI),
        );
        breaks.push(PI);
        breaks.dedup();
        let res = integrate_with_breaks(&f, &breaks, &QuadOptions::with_tol(1e-8))?;
        if !res.value.is_finite() {
            self.dcs(k, 0.0)?;
        }
        Ok(res.value / BOHR_SQUARED_CM2)
    }

    /// Total cross-section in bohr² and the branch that produced it.
    pub fn sigma(&self, k: f64) -> Result<(f64, SigmaBranch), LithiumError> {
        if k > 0.0 && k < LOW_K_MAX {
            Ok((sigma_lowk(k)?, SigmaBranch::LowkFit))
        } else if (LOW_K_MAX..HIGH_K_MIN).contains(&k) {
            Ok((self.sigma_direct(k)?, SigmaBranch::Direct))
        } else if k >= HIGH_K_MIN {
            Ok((sigma_highk(k)?, SigmaBranch::Highk))
        } else {
            Err(LithiumError::Domain {
                what: "k",
                value: k,
                domain: "(0, inf)",
            })
        }
    }

    pub fn table1(&self, ks: &[f64]) -> Result<Vec<CrossSectionRow>, LithiumError> {
        ks.par_iter()
            .map(|&k| self.sigma(k).map(|(s, b)| CrossSectionRow::new(k, s, b)))
            .collect()
    }
}
