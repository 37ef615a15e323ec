//! One- and two-center integrals over the channel orbitals.
//!
//! The printed closed forms are kept callable in [`printed`]. Two of them are
//! wrong as printed: the inter-center 1s overlap carries the opposite overall
//! sign, and the 2s overlap bracket is garbled. [`IntegralForm::Corrected`]
//! negates the former and evaluates the latter through the auxiliary-function
//! expansion, which is also the fallback for coincident exponents.

use serde::{Deserialize, Serialize};

use super::{LithiumError, Orbital, OrbitalParams};
use crate::numerics::{spheroidal_two_center, sto_two_center, Center, StoFactor, Weight};

/// Exponent differences below this switch to the regular expansion.
const DEGENERATE: f64 = 1e-4;
/// The closed forms divide by powers of the exponent difference and lose
/// about `eps / diff³` relative accuracy; the corrected set leaves them
/// well before that.
const CLOSED_FORM_MIN_GAP: f64 = 1e-2;

/// Half-width of the symmetric shift used to take the removable limit of a
/// printed expression at coincident exponents.
const PRINTED_LIMIT_SHIFT: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum IntegralForm {
    /// Closed forms exactly as printed.
    Printed,
    /// Printed forms where they are right, corrected forms elsewhere.
    #[default]
    Corrected,
}

/// The eight integrals at one internuclear distance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralSet {
    pub r: f64,
    /// `⟨φ*|φ₁ₛ⟩`, one-center.
    pub delta_1s1s: f64,
    /// `⟨φ*|φ₂ₛ⟩`, one-center.
    pub delta_1s2s: f64,
    /// `⟨ψ_H|φ₁ₛ⟩`.
    pub s_1s1s: f64,
    /// `⟨ψ_H|φ₂ₛ⟩`.
    pub s_1s2s: f64,
    /// `⟨φ*|1/r_p|φ₁ₛ⟩`.
    pub k_1s1s: f64,
    /// `⟨φ*|1/r_p|φ₂ₛ⟩`.
    pub k_1s2s: f64,
    /// `⟨ψ_H|1/r_p|φ₁ₛ⟩`.
    pub a_1s1s: f64,
    /// `⟨ψ_H|1/r_p|φ₂ₛ⟩`.
    pub a_1s2s: f64,
}

impl IntegralSet {
    /// One-electron overlap between a final-state and an initial-state orbital.
    pub fn overlap(&self, bra: Orbital, ket: Orbital) -> Result<f64, LithiumError> {
        match (bra, ket) {
            (Orbital::LiPlus1s, Orbital::Li1s) => Ok(self.delta_1s1s),
            (Orbital::LiPlus1s, Orbital::Li2s) => Ok(self.delta_1s2s),
            (Orbital::H1s, Orbital::Li1s) => Ok(self.s_1s1s),
            (Orbital::H1s, Orbital::Li2s) => Ok(self.s_1s2s),
            _ => Err(LithiumError::UnknownIntegral { bra, ket }),
        }
    }

    /// One-electron matrix element of `1/r_p` (distance to the proton).
    pub fn potential(&self, bra: Orbital, ket: Orbital) -> Result<f64, LithiumError> {
        match (bra, ket) {
            (Orbital::LiPlus1s, Orbital::Li1s) => Ok(self.k_1s1s),
            (Orbital::LiPlus1s, Orbital::Li2s) => Ok(self.k_1s2s),
            (Orbital::H1s, Orbital::Li1s) => Ok(self.a_1s1s),
            (Orbital::H1s, Orbital::Li2s) => Ok(self.a_1s2s),
            _ => Err(LithiumError::UnknownIntegral { bra, ket }),
        }
    }

    /// Integrals in a fixed order with their names, for tabulation.
    pub fn named(&self) -> [(&'static str, f64); 8] {
        [
            ("delta_1s1s", self.delta_1s1s),
            ("delta_1s2s", self.delta_1s2s),
            ("s_1s1s", self.s_1s1s),
            ("s_1s2s", self.s_1s2s),
            ("k_1s1s", self.k_1s1s),
            ("k_1s2s", self.k_1s2s),
            ("a_1s1s", self.a_1s1s),
            ("a_1s2s", self.a_1s2s),
        ]
    }
}

/// The closed forms as printed. Arguments: `r` internuclear distance,
/// `a` the lithium exponent (α₁ or α₂), `s` = α*, `b` = β.
pub mod printed {
    fn cth(x: f64) -> f64 {
        1.0 / x.tanh()
    }

    /// `sh(x) e^{-y}` without overflow for large arguments.
    fn sh_exp(x: f64, y: f64) -> f64 {
        0.5 * ((x - y).exp() - (-x - y).exp())
    }

    pub fn delta_1s1s(a: f64, s: f64) -> f64 {
        8.0 * (a * s).powf(1.5) / (a + s).powi(3)
    }

    pub fn delta_1s2s(a: f64, s: f64) -> f64 {
        8.0 * (0.5 * a * s).powf(1.5) / (0.5 * a + s).powi(3) * (1.0 - 3.0 * a / (a + 2.0 * s))
    }

    pub fn s_1s1s(r: f64, a: f64, b: f64) -> f64 {
        let x = 0.5 * r * (a - b);
        8.0 * (a * b).powf(1.5) / (b * b - a * a)
            * sh_exp(x, 0.5 * r * (a + b))
            * (1.0 / (a + b) + cth(x) / (a - b) - 8.0 * a * b / (r * (a * a - b * b).powi(2)))
    }

    pub fn s_1s2s(r: f64, a: f64, b: f64) -> f64 {
        let h = 0.5 * a;
        let d = h - b;
        let u = h + b;
        let x = 0.5 * r * d;
        let c = cth(x);
        let pre = (a * b).powf(1.5) / 2f64.sqrt() * r * sh_exp(x, 0.5 * r * u) / (b * b - h * h);
        let bracket = (4.0 / (r * u)) * 8.0 * a * b / (r * r * (h * h - b * b).powi(2))
            + 4.0 * c / (r * d)
            - a * (1.0 - c) / (r * u)
            - 2.0 * a * (3.0 - c) / (r * u * u)
            - 12.0 * a / (r * r * u.powi(3))
            + 12.0 * a / (r * r * d.powi(3))
            + a * (1.0 - c) / (r * d)
            - 2.0 * a * (1.0 + c) / (r * (h * h - b * b))
            + 2.0 * a * (1.0 - 3.0 * c) / (r * d * d);
        pre * bracket
    }

    pub fn k_1s1s(r: f64, a: f64, s: f64) -> f64 {
        let c = a + s;
        let x = 0.5 * r * c;
        4.0 * (a * s).powf(1.5) / (c * c) * sh_exp(x, x) * (1.0 + 4.0 / (r * c) - cth(x))
    }

    pub fn k_1s2s(r: f64, a: f64, s: f64) -> f64 {
        let c = 0.5 * a + s;
        let x = 0.5 * r * c;
        let ct = cth(x);
        2f64.sqrt() * (a * s).powf(1.5) / (c * c)
            * sh_exp(x, x)
            * (1.0 + 4.0 / (r * c)
                - ct
                - 0.5 * r * a * (1.0 - ct)
                - 2.0 * a * (1.0 - ct) / c
                - 6.0 * a / (r * c * c))
    }

    pub fn a_1s1s(r: f64, a: f64, b: f64) -> f64 {
        let x = 0.5 * r * (a - b);
        4.0 * (a * b).powf(1.5) / (a * a - b * b)
            * sh_exp(x, 0.5 * r * (a + b))
            * (1.0 + 4.0 * a / (r * (a * a - b * b)) - cth(x))
    }

    pub fn a_1s2s(r: f64, a: f64, b: f64) -> f64 {
        let h = 0.5 * a;
        let d = h - b;
        let u = h + b;
        let x = 0.5 * r * d;
        let c = cth(x);
        2f64.sqrt() * (a * b).powf(1.5) / (h * h - b * b)
            * sh_exp(x, 0.5 * r * u)
            * (1.0
                - c
                - 0.5 * r * a * (1.0 - c)
                - a * (1.0 - c) / u
                - a * (1.0 - c) / d
                - 2.0 * a / (r * u * u)
                - 2.0 * a / (r * d * d))
    }
}

/// Weight of [`two_center_oracle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleWeight {
    Unity,
    /// `1/r_p`, the inverse distance to the proton.
    InverseRProton,
}

/// `⟨bra|w|ket⟩` by direct quadrature in prolate spheroidal coordinates.
pub fn two_center_oracle(
    bra: Orbital,
    ket: Orbital,
    weight: OracleWeight,
    r: f64,
    params: &OrbitalParams,
    tol: f64,
) -> Result<f64, LithiumError> {
    let w = match weight {
        OracleWeight::Unity => Weight::Unity,
        OracleWeight::InverseRProton => Weight::InverseRA,
    };
    let p = *params;
    let res = spheroidal_two_center(
        move |x| bra.value(&p, x),
        bra.center(),
        move |x| ket.value(&p, x),
        ket.center(),
        w,
        r,
        tol,
    )?;
    Ok(res.value)
}

/// `⟨bra|w|ket⟩` from the auxiliary-function expansion of the STO terms.
pub fn auxiliary_integral(
    bra: Orbital,
    ket: Orbital,
    weight: OracleWeight,
    r: f64,
    params: &OrbitalParams,
) -> Result<f64, LithiumError> {
    let w = match weight {
        OracleWeight::Unity => Weight::Unity,
        OracleWeight::InverseRProton => Weight::InverseRA,
    };
    let mut total = 0.0;
    for (cb, fb) in bra.sto_terms(params) {
        for (ck, fk) in ket.sto_terms(params) {
            let mut on_a = StoFactor::new(0, 0.0);
            let mut on_b = StoFactor::new(0, 0.0);
            for (f, center) in [(fb, bra.center()), (fk, ket.center())] {
                let slot = if center == Center::A {
                    &mut on_a
                } else {
                    &mut on_b
                };
                slot.power += f.power;
                slot.exponent += f.exponent;
            }
            total += cb * ck * sto_two_center(on_a, on_b, w, r)?;
        }
    }
    Ok(total)
}

/// Evaluates `f(b)` at a removable singularity by the symmetric average.
fn printed_limit(b: f64, degenerate: bool, f: impl Fn(f64) -> f64) -> f64 {
    if degenerate {
        0.5 * (f(b + PRINTED_LIMIT_SHIFT) + f(b - PRINTED_LIMIT_SHIFT))
    } else {
        f(b)
    }
}

/// All eight integrals at distance `r`.
pub fn analytic_integrals(
    r: f64,
    params: &OrbitalParams,
    form: IntegralForm,
) -> Result<IntegralSet, LithiumError> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(LithiumError::Domain {
            what: "R",
            value: r,
            domain: "(0, inf)",
        });
    }
    params.validate()?;
    let (a1, a2, s, b) = (params.alpha1, params.alpha2, params.alpha_star, params.beta);
    let deg11 = (a1 - b).abs() < DEGENERATE;
    let deg12 = (0.5 * a2 - b).abs() < DEGENERATE;
    let delta_1s1s = printed::delta_1s1s(a1, s);
    let delta_1s2s = printed::delta_1s2s(a2, s);
    let k_1s1s = printed::k_1s1s(r, a1, s);
    let k_1s2s = printed::k_1s2s(r, a2, s);
    let set = match form {
        IntegralForm::Printed => IntegralSet {
            r,
            delta_1s1s,
            delta_1s2s,
            s_1s1s: printed_limit(b, deg11, |bb| printed::s_1s1s(r, a1, bb)),
            s_1s2s: printed_limit(b, deg12, |bb| printed::s_1s2s(r, a2, bb)),
            k_1s1s,
            k_1s2s,
            a_1s1s: printed_limit(b, deg11, |bb| printed::a_1s1s(r, a1, bb)),
            a_1s2s: printed_limit(b, deg12, |bb| printed::a_1s2s(r, a2, bb)),
        },
        IntegralForm::Corrected => {
            let deg11 = (a1 - b).abs() < CLOSED_FORM_MIN_GAP;
            let deg12 = (0.5 * a2 - b).abs() < CLOSED_FORM_MIN_GAP;
            let aux = |ket, w| auxiliary_integral(Orbital::H1s, ket, w, r, params);
            IntegralSet {
                r,
                delta_1s1s,
                delta_1s2s,
                s_1s1s: if deg11 {
                    aux(Orbital::Li1s, OracleWeight::Unity)?
                } else {
                    -printed::s_1s1s(r, a1, b)
                },
                s_1s2s: aux(Orbital::Li2s, OracleWeight::Unity)?,
                k_1s1s,
                k_1s2s,
                a_1s1s: if deg11 {
                    aux(Orbital::Li1s, OracleWeight::InverseRProton)?
                } else {
                    printed::a_1s1s(r, a1, b)
                },
                a_1s2s: if deg12 {
                    aux(Orbital::Li2s, OracleWeight::InverseRProton)?
                } else {
                    printed::a_1s2s(r, a2, b)
                },
            }
        }
    };
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_is_one_for_identical_orbitals() {
        let p = OrbitalParams {
            alpha_star: 2.698,
            ..OrbitalParams::default()
        };
        let set = analytic_integrals(1.0, &p, IntegralForm::Corrected).unwrap();
        assert!((set.delta_1s1s - 1.0).abs() < 1e-15);
    }

    #[test]
    fn one_center_hydrogen_potential_is_beta() {
        let p = OrbitalParams::default();
        let v = two_center_oracle(
            Orbital::H1s,
            Orbital::H1s,
            OracleWeight::InverseRProton,
            1.0,
            &p,
            1e-11,
        )
        .unwrap();
        assert!((v - p.beta).abs() < 1e-9);
        let n = two_center_oracle(
            Orbital::Li1s,
            Orbital::Li1s,
            OracleWeight::Unity,
            2.0,
            &p,
            1e-11,
        )
        .unwrap();
        assert!((n - 1.0).abs() < 1e-10);
    }

    #[test]
    fn unknown_pairs_are_reported() {
        let set =
            analytic_integrals(1.0, &OrbitalParams::default(), IntegralForm::Corrected).unwrap();
        assert!(matches!(
            set.overlap(Orbital::Li1s, Orbital::H1s),
            Err(LithiumError::UnknownIntegral { .. })
        ));
    }

    #[test]
    fn nonpositive_distance_is_rejected() {
        assert!(
            analytic_integrals(0.0, &OrbitalParams::default(), IntegralForm::Corrected).is_err()
        );
    }
}
