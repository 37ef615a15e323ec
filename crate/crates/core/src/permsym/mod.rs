//! Permutation symmetry: permutations, Young tableaux, Young's orthogonal
//! representation, Young operators and exact spin functions.
//!
//! Coefficients are exact elements of `Q(sqrt 2, sqrt 3)` ([`Surd`]), which
//! covers every shape with at most four particles.

mod combination;
mod perm;
mod surd;
mod tableau;
mod young;

pub use combination::{Combination, Spin, SpinFunction};
pub use perm::Permutation;
pub use surd::{Rational, Surd};
pub use tableau::{standard_tableaux, Partition, YoungTableau};
pub use young::{OrthogonalRep, SurdMatrix, YoungConvention, YoungOperator};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermsymError {
    #[error("not a valid partition: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("shape {0} is not supported here (coefficients leave Q(sqrt2, sqrt3) or convention undefined)")]
    UnsupportedShape(Partition),
    #[error("tableau indices ({r}, {s}) out of range for dimension {dimension}")]
    IndexOutOfRange {
        r: usize,
        s: usize,
        dimension: usize,
    },
    #[error("operator acts on {operator} particles but state has {state}")]
    DegreeMismatch { operator: usize, state: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
}

/// Convenience constructor for `ω_rs` of a shape given as row lengths.
pub fn young_operator(
    rows: &[usize],
    r: usize,
    s: usize,
    convention: YoungConvention,
) -> Result<YoungOperator, PermsymError> {
    YoungOperator::new(&Partition::new(rows.to_vec())?, r, s, convention)
}
