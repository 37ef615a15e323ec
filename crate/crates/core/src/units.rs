//! Atomic-unit conversion constants used for reporting.

/// Bohr radius squared in cm^2.
pub const BOHR_SQUARED_CM2: f64 = 2.80028e-17;
/// Bohr radius in cm.
pub const BOHR_CM: f64 = 0.529177e-8;
/// One hartree in eV.
pub const HARTREE_EV: f64 = 27.2114;
/// Atomic unit of velocity in cm/s.
pub const VELOCITY_AU_CM_PER_S: f64 = 2.18769e8;
/// Reduced mass of the incoming p + Li channel, in electron masses.
pub const MU_INITIAL: f64 = 1606.79;
/// Reduced mass of the outgoing H + Li+ channel, in electron masses.
pub const MU_FINAL: f64 = 1607.54;
