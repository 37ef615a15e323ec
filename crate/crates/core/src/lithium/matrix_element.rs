//! Exchange matrix element, normalization factors and the configured model.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{
    analytic_integrals, IntegralForm, IntegralSet, LithiumError, Orbital, OrbitalParams, P_COUNT,
};
use crate::numerics::{radial_fourier, RadialOptions};
use crate::permsym::{young_operator, Combination, SpinFunction, Surd, YoungConvention};

/// `⟨b₁b₂b₃|V₀|k₁k₂k₃⟩` for `V₀ = 3/R - Σ_j 1/r_pj`, with one-electron
/// factors taken from `ints`.
pub fn three_electron_element(
    bra: [Orbital; 3],
    ket: [Orbital; 3],
    ints: &IntegralSet,
) -> Result<f64, LithiumError> {
    let mut o = [0.0; 3];
    let mut u = [0.0; 3];
    for j in 0..3 {
        o[j] = ints.overlap(bra[j], ket[j])?;
        u[j] = ints.potential(bra[j], ket[j])?;
    }
    let all = o[0] * o[1] * o[2];
    let attraction = u[0] * o[1] * o[2] + o[0] * u[1] * o[2] + o[0] * o[1] * u[2];
    Ok(3.0 / ints.r * all - attraction)
}

const BRA_DIRECT: [Orbital; 3] = [Orbital::LiPlus1s, Orbital::LiPlus1s, Orbital::H1s];
const BRA_EXCHANGED: [Orbital; 3] = [Orbital::H1s, Orbital::LiPlus1s, Orbital::LiPlus1s];
const KET_DIRECT: [Orbital; 3] = [Orbital::Li1s, Orbital::Li1s, Orbital::Li2s];
const KET_EXCHANGED: [Orbital; 3] = [Orbital::Li2s, Orbital::Li1s, Orbital::Li1s];

/// Kernel `G(R)` as the signed sum of the direct, the two single-exchange and
/// the double-exchange three-electron elements.
pub fn kernel_four_term(ints: &IntegralSet) -> Result<f64, LithiumError> {
    Ok(three_electron_element(BRA_DIRECT, KET_DIRECT, ints)?
        - three_electron_element(BRA_DIRECT, KET_EXCHANGED, ints)?
        - three_electron_element(BRA_EXCHANGED, KET_DIRECT, ints)?
        + three_electron_element(BRA_EXCHANGED, KET_EXCHANGED, ints)?)
}

/// Which closed expression of the kernel to integrate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum KernelForm {
    /// Factored form of the four-term sum, `2 T₁ - 2 T₂`.
    #[default]
    Factored,
    /// The factored expression as printed. It carries an extra
    /// `S₁₂(3Δ₁₁/R - K₁₁ - K₁₂) - A₁₁Δ₁₂` term and a single `T₂`.
    Printed,
}

/// `G(R)` in the requested form.
pub fn kernel(ints: &IntegralSet, form: KernelForm) -> f64 {
    let IntegralSet {
        r,
        delta_1s1s: d11,
        delta_1s2s: d12,
        s_1s1s: s11,
        s_1s2s: s12,
        k_1s1s: k11,
        k_1s2s: k12,
        a_1s1s: a11,
        a_1s2s: a12,
    } = *ints;
    match form {
        KernelForm::Factored => {
            let t1 = d11 * (3.0 / r * d11 * s12 - 2.0 * k11 * s12 - d11 * a12);
            let t2 = d11 * d12 * (3.0 * s11 / r - a11) - s11 * (k11 * d12 + k12 * d11);
            2.0 * t1 - 2.0 * t2
        }
        KernelForm::Printed => {
            d11 * (6.0 / r * d11 * s12 - 2.0 * a12 * d11 - 4.0 * k11 * s12)
                - (s12 * (3.0 / r * d11 - k11 - k12) - a11 * d12)
                - d11 * d12 * (3.0 * s11 / r - a11)
                + s11 * (k11 * d12 + k12 * d11)
        }
    }
}

/// `F(R) = (20/3)(Δ₁₁² S₁₂ - Δ₁₁Δ₁₂ S₁₁)`, the normalization-factor kernel.
pub fn f0_kernel(ints: &IntegralSet) -> f64 {
    20.0 / 3.0
        * (ints.delta_1s1s * ints.delta_1s1s * ints.s_1s2s
            - ints.delta_1s1s * ints.delta_1s2s * ints.s_1s1s)
}

/// The same kernel from the unreduced overlap
/// `(4/3)⟨4 φ*φ*ψ_H - 3 φ*ψ_Hφ* - ψ_Hφ*φ*|φ₁ₛφ₁ₛφ₂ₛ - φ₂ₛφ₁ₛφ₁ₛ⟩`.
pub fn f0_kernel_expanded(ints: &IntegralSet) -> Result<f64, LithiumError> {
    use Orbital::*;
    let bras: [(f64, [Orbital; 3]); 3] = [
        (4.0, [LiPlus1s, LiPlus1s, H1s]),
        (-3.0, [LiPlus1s, H1s, LiPlus1s]),
        (-1.0, [H1s, LiPlus1s, LiPlus1s]),
    ];
    let kets: [(f64, [Orbital; 3]); 2] = [(1.0, KET_DIRECT), (-1.0, KET_EXCHANGED)];
    let mut total = 0.0;
    for (cb, b) in bras {
        for (ck, k) in kets {
            let mut prod = 1.0;
            for j in 0..3 {
                prod *= ints.overlap(b[j], k[j])?;
            }
            total += cb * ck * prod;
        }
    }
    Ok(4.0 / 3.0 * total)
}

/// `f₀(q)` by the convolution theorem: each inter-center overlap is a
/// convolution of two orbitals, so its transform is a product.
pub fn f0_closed_form(q: f64, params: &OrbitalParams) -> f64 {
    let d11 = super::printed::delta_1s1s(params.alpha1, params.alpha_star);
    let d12 = super::printed::delta_1s2s(params.alpha2, params.alpha_star);
    let h = Orbital::H1s.fourier_transform(params, q);
    20.0 / 3.0
        * h
        * (d11 * d11 * Orbital::Li2s.fourier_transform(params, q)
            - d11 * d12 * Orbital::Li1s.fourier_transform(params, q))
}

/// `f_Li²` from the Young operators, with orthonormal orbital labels.
pub fn f_li_squared() -> Result<Surd, LithiumError> {
    let space = Combination::product(vec!["1s", "1s", "2s"]);
    let spin = SpinFunction::parse("aba").expect("valid spin string");
    let conv = YoungConvention::Printed;
    let psi1 = young_operator(&[2, 1], 1, 1, conv)?.apply(&space)?;
    let psi2 = young_operator(&[2, 1], 1, 2, conv)?.apply(&space)?;
    let x1 = young_operator(&[2, 1], 2, 2, conv)?.apply_to_particles(&spin)?;
    let x2 = young_operator(&[2, 1], 2, 1, conv)?.apply_to_particles(&spin)?;
    Ok(psi1.inner_orthonormal(&psi1) * x1.inner_orthonormal(&x1)
        + psi2.inner_orthonormal(&psi2) * x2.inner_orthonormal(&x2))
}

/// `f_Li` computed from [`f_li_squared`].
pub fn f_li() -> Result<f64, LithiumError> {
    Ok(f_li_squared()?.to_f64().sqrt())
}

/// Where `f₀` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum F0Mode {
    /// At the momentum transfer of the matrix element.
    #[default]
    AtMomentumTransfer,
    /// Frozen at `q = 0`.
    Frozen,
}

/// Which value of `f_Li` enters the matrix-element prefactor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum FLiConvention {
    /// `f_Li = 2`.
    #[default]
    Adopted,
    /// `f_Li` from the Young operators (`√3`).
    Computed,
}

/// The channel with all convention switches.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LithiumModel {
    pub params: OrbitalParams,
    pub integrals: IntegralForm,
    pub kernel: KernelForm,
    pub f0_mode: F0Mode,
    pub f_li: FLiConvention,
    #[serde(skip, default = "default_radial")]
    pub radial: RadialOptions,
}

fn default_radial() -> RadialOptions {
    // The kernel decays like exp(-0.4 R).
    RadialOptions {
        support: 90.0,
        ..RadialOptions::default()
    }
}

impl Default for LithiumModel {
    fn default() -> Self {
        Self::new(OrbitalParams::default())
    }
}

impl LithiumModel {
    pub fn new(params: OrbitalParams) -> Self {
        Self {
            params,
            integrals: IntegralForm::default(),
            kernel: KernelForm::default(),
            f0_mode: F0Mode::default(),
            f_li: FLiConvention::default(),
            radial: default_radial(),
        }
    }

    pub fn integrals_at(&self, r: f64) -> Result<IntegralSet, LithiumError> {
        analytic_integrals(r, &self.params, self.integrals)
    }

    /// `G(R)`; the first error met during integration is kept in `err`.
    fn kernel_fn<'a>(
        &'a self,
        err: &'a std::cell::RefCell<Option<LithiumError>>,
        which: fn(&IntegralSet, KernelForm) -> f64,
    ) -> impl Fn(f64) -> f64 + 'a {
        move |r: f64| {
            if r <= 0.0 {
                return 0.0;
            }
            match self.integrals_at(r) {
                Ok(ints) => which(&ints, self.kernel),
                Err(e) => {
                    err.borrow_mut().get_or_insert(e);
                    0.0
                }
            }
        }
    }

    fn transform(
        &self,
        q: f64,
        which: fn(&IntegralSet, KernelForm) -> f64,
        opts: &RadialOptions,
    ) -> Result<f64, LithiumError> {
        if !(q >= 0.0) || !q.is_finite() {
            return Err(LithiumError::Domain {
                what: "q",
                value: q,
                domain: "[0, inf)",
            });
        }
        let err = std::cell::RefCell::new(None);
        let g = self.kernel_fn(&err, which);
        let res = radial_fourier(g, q, opts)?;
        if let Some(e) = err.into_inner() {
            return Err(e);
        }
        Ok(res.value)
    }

    /// `f₀(q)` from the radial transform of [`f0_kernel`].
    pub fn f0_factor(&self, q: f64) -> Result<f64, LithiumError> {
        self.f0_factor_with(q, &self.radial)
    }

    pub fn f0_factor_with(&self, q: f64, opts: &RadialOptions) -> Result<f64, LithiumError> {
        self.transform(q, |ints, _| f0_kernel(ints), opts)
    }

    /// `f₀` as used in the cross-section: closed form at `q` or at zero.
    pub fn f0_used(&self, q: f64) -> f64 {
        match self.f0_mode {
            F0Mode::AtMomentumTransfer => f0_closed_form(q, &self.params),
            F0Mode::Frozen => f0_closed_form(0.0, &self.params),
        }
    }

    pub fn f_li_value(&self) -> Result<f64, LithiumError> {
        match self.f_li {
            FLiConvention::Adopted => Ok(2.0),
            FLiConvention::Computed => f_li(),
        }
    }

    /// `∫ d³R e^{iq·R} G(R)`.
    pub fn kernel_transform(&self, q: f64) -> Result<f64, LithiumError> {
        self.transform(q, kernel, &self.radial)
    }

    /// `⟨Ψ_f⁰|V₀|Φ_i⟩ = (4/√3)(1/P)(f₀/f_Li) ∫ d³R e^{iq·R} G(R)` in
    /// hartree·bohr³. The kernel is real and spherically symmetric, so the
    /// imaginary part vanishes.
    pub fn matrix_element(&self, q: f64) -> Result<Complex64, LithiumError> {
        let g = self.kernel_transform(q)?;
        let pre = 4.0 / 3f64.sqrt() / P_COUNT as f64 * self.f0_used(q) / self.f_li_value()?;
        Ok(Complex64::new(pre * g, 0.0))
    }
}
