use thiserror::Error;

use crate::{
    basis::BasisError, lithium::LithiumError, numerics::NumericsError, permsym::PermsymError,
};
use crate::{scattering::ScatteringError, tdept::TdeptError};

/// Crate-level error wrapping the per-module errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Permsym(#[from] PermsymError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Tdept(#[from] TdeptError),
    #[error(transparent)]
    Scattering(#[from] ScatteringError),
    #[error(transparent)]
    Lithium(#[from] LithiumError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
