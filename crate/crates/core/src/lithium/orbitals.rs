use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::LithiumError;
use crate::numerics::{Center, StoFactor};

/// Orbital exponents in inverse bohr.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitalParams {
    /// Li 1s exponent.
    #[serde(default = "defaults::alpha1")]
    pub alpha1: f64,
    /// Li 2s exponent (the radial factor uses `α₂/2`).
    #[serde(default = "defaults::alpha2")]
    pub alpha2: f64,
    /// Li⁺ 1s exponent.
    #[serde(default = "defaults::alpha_star")]
    pub alpha_star: f64,
    /// H 1s exponent.
    #[serde(default = "defaults::beta")]
    pub beta: f64,
}

mod defaults {
    pub fn alpha1() -> f64 {
        2.698
    }
    pub fn alpha2() -> f64 {
        0.795
    }
    pub fn alpha_star() -> f64 {
        1.692
    }
    pub fn beta() -> f64 {
        1.0
    }
}

impl Default for OrbitalParams {
    fn default() -> Self {
        Self {
            alpha1: defaults::alpha1(),
            alpha2: defaults::alpha2(),
            alpha_star: defaults::alpha_star(),
            beta: defaults::beta(),
        }
    }
}

impl OrbitalParams {
    /// Reads parameters from TOML; missing keys keep their defaults.
    pub fn from_toml(text: &str) -> Result<Self, LithiumError> {
        let p: Self =
            toml::from_str(text).map_err(|e| LithiumError::InvalidParams(e.to_string()))?;
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), LithiumError> {
        for (name, v) in [
            ("alpha1", self.alpha1),
            ("alpha2", self.alpha2),
            ("alpha_star", self.alpha_star),
            ("beta", self.beta),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(LithiumError::InvalidParams(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// The four one-electron orbitals of the channel. Lithium orbitals sit on
/// the lithium nucleus, the hydrogen orbital on the proton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orbital {
    Li1s,
    Li2s,
    LiPlus1s,
    H1s,
}

impl Orbital {
    pub const ALL: [Orbital; 4] = [
        Orbital::Li1s,
        Orbital::Li2s,
        Orbital::LiPlus1s,
        Orbital::H1s,
    ];

    /// Center in the two-center integrals: A is the proton, B lithium.
    pub fn center(self) -> Center {
        match self {
            Orbital::H1s => Center::A,
            _ => Center::B,
        }
    }

    /// `φ(r)` at distance `r` from its own center.
    pub fn value(self, p: &OrbitalParams, r: f64) -> f64 {
        match self {
            Orbital::Li1s => (p.alpha1.powi(3) / PI).sqrt() * (-p.alpha1 * r).exp(),
            Orbital::LiPlus1s => (p.alpha_star.powi(3) / PI).sqrt() * (-p.alpha_star * r).exp(),
            Orbital::H1s => (p.beta.powi(3) / PI).sqrt() * (-p.beta * r).exp(),
            Orbital::Li2s => {
                let a = p.alpha2;
                (a.powi(3) / (8.0 * PI)).sqrt() * (1.0 - 0.5 * a * r) * (-0.5 * a * r).exp()
            }
        }
    }

    /// Expansion `Σ c r^n e^{-ζ r}` as `(c, factor)` pairs.
    pub fn sto_terms(self, p: &OrbitalParams) -> Vec<(f64, StoFactor)> {
        match self {
            Orbital::Li1s => vec![((p.alpha1.powi(3) / PI).sqrt(), StoFactor::new(0, p.alpha1))],
            Orbital::LiPlus1s => vec![(
                (p.alpha_star.powi(3) / PI).sqrt(),
                StoFactor::new(0, p.alpha_star),
            )],
            Orbital::H1s => vec![((p.beta.powi(3) / PI).sqrt(), StoFactor::new(0, p.beta))],
            Orbital::Li2s => {
                let a = p.alpha2;
                let n = (a.powi(3) / (8.0 * PI)).sqrt();
                vec![
                    (n, StoFactor::new(0, 0.5 * a)),
                    (-0.5 * a * n, StoFactor::new(1, 0.5 * a)),
                ]
            }
        }
    }

    /// Three-dimensional Fourier transform `∫ e^{iq·r} φ(r) d³r`.
    pub fn fourier_transform(self, p: &OrbitalParams, q: f64) -> f64 {
        let one_s = |z: f64| (z.powi(3) / PI).sqrt() * 8.0 * PI * z / (z * z + q * q).powi(2);
        match self {
            Orbital::Li1s => one_s(p.alpha1),
            Orbital::LiPlus1s => one_s(p.alpha_star),
            Orbital::H1s => one_s(p.beta),
            Orbital::Li2s => {
                let a = p.alpha2;
                let b = 0.5 * a;
                (a.powi(3) / (8.0 * PI)).sqrt() * 16.0 * PI * b * (q * q - b * b)
                    / (b * b + q * q).powi(3)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{integrate_semi_infinite, QuadOptions};

    #[test]
    fn hydrogen_at_origin() {
        let p = OrbitalParams::default();
        assert!((Orbital::H1s.value(&p, 0.0) - PI.powf(-0.5)).abs() < 1e-15);
    }

    #[test]
    fn two_s_node() {
        let p = OrbitalParams::default();
        let r0 = 2.0 / p.alpha2;
        assert!((r0 - 2.515_723_270_440_25).abs() < 1e-12);
        assert!(Orbital::Li2s.value(&p, r0).abs() < 1e-16);
    }

    #[test]
    fn orbitals_are_normalized() {
        let p = OrbitalParams::default();
        for o in Orbital::ALL {
            let n = integrate_semi_infinite(
                &|r: f64| 4.0 * PI * r * r * o.value(&p, r).powi(2),
                0.0,
                &QuadOptions::with_tol(1e-13),
            )
            .unwrap()
            .value;
            assert!((n - 1.0).abs() < 1e-10, "{o:?}: {n}");
        }
    }

    #[test]
    fn sto_expansion_reproduces_values() {
        let p = OrbitalParams::default();
        for o in Orbital::ALL {
            for &r in &[0.0f64, 0.3, 2.0, 7.5] {
                let s: f64 = o
                    .sto_terms(&p)
                    .iter()
                    .map(|(c, f)| c * r.powi(f.power as i32) * (-f.exponent * r).exp())
                    .sum();
                assert!((s - o.value(&p, r)).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn toml_overrides_and_defaults() {
        let p = OrbitalParams::from_toml("alpha_star = 2.698\n").unwrap();
        assert_eq!(p.alpha_star, 2.698);
        assert_eq!(p.beta, 1.0);
        assert!(OrbitalParams::from_toml("beta = -1.0\n").is_err());
        assert!(OrbitalParams::from_toml("gamma = 1.0\n").is_err());
    }
}
