//! Invariant time-dependent exchange perturbation theory.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`]: quadrature, radial Fourier transforms, two-center integrals.
//! * [`permsym`]: permutations, Young tableaux and Young operators with exact
//!   coefficients, spin functions.
//! * [`basis`]: non-orthogonal product states, antisymmetrized states and the
//!   projectors of the exchange formalism, with a finite toy realization.
//! * [`tdept`]: time-dependent amplitudes to arbitrary order.
//! * [`scattering`]: S and T matrices, rates and cross-sections.
//! * [`lithium`]: the proton-lithium charge-transfer application.

// Argument checks are written as `!(x > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod basis;
pub mod error;
pub mod lithium;
pub mod numerics;
pub mod permsym;
pub mod scattering;
pub mod tdept;
pub mod tolerances;
pub mod units;

pub use error::{Error, Result};
pub use num_complex::Complex64;
