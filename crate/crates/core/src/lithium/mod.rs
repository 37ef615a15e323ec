//! The Li + p → Li⁺ + H charge-transfer channel.
//!
//! Orbitals and their analytic two-center integrals, the exchange matrix
//! element and normalization factor as radial Fourier transforms, and the
//! differential and total cross-sections built on them.

mod cross_section;
mod integrals;
mod matrix_element;
mod orbitals;

pub use cross_section::{
    dcs_lowk_fit, im_forward_amplitude, sigma_highk, sigma_lowk, sigma_lowk_integrated,
    sigma_optical, CrossSectionRow, LowKIntegration, SigmaBranch, REFERENCE_TABLE1,
    TABLE1_ACCEPTANCE_K,
};
pub use integrals::{
    analytic_integrals, auxiliary_integral, printed, two_center_oracle, IntegralForm, IntegralSet,
    OracleWeight,
};
pub use matrix_element::{
    f0_closed_form, f0_kernel, f0_kernel_expanded, f_li, f_li_squared, kernel, kernel_four_term,
    three_electron_element, F0Mode, FLiConvention, KernelForm, LithiumModel,
};
pub use orbitals::{Orbital, OrbitalParams};

use thiserror::Error;

use crate::numerics::NumericsError;
use crate::permsym::PermsymError;

/// Number of inter-center permutations for this channel.
pub const P_COUNT: usize = 6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LithiumError {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Permsym(#[from] PermsymError),
    #[error("invalid orbital parameters: {0}")]
    InvalidParams(String),
    #[error("{what} = {value} is outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },
    #[error("no one-electron integral is defined between {bra:?} and {ket:?}")]
    UnknownIntegral { bra: Orbital, ket: Orbital },
}
