//! Non-orthogonal product states, antisymmetrized states and the projectors
//! of the exchange formalism.
//!
//! [`ExchangeBasis`] realizes a truncated basis concretely: every product
//! state `Φ_n^(p)` is a vector in a small real ambient space on which the
//! inter-center permutations act by orthogonal matrices. Overlaps, the
//! projectors `Λ^(p)` and `Ô_i`, the resolution of the identity and matrix
//! elements are then plain linear algebra, exact up to rounding.

mod config;
mod overlap;

pub use config::{ProfileConfig, RunConfig, ToyConfig};
pub use overlap::OverlapModel;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use thiserror::Error;

use crate::permsym::{Permutation, SpinFunction};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BasisError {
    #[error("state index {index} out of range for {count} states")]
    StateOutOfRange { index: usize, count: usize },
    #[error("permutation index {index} out of range for P = {count}")]
    PermutationOutOfRange { index: usize, count: usize },
    #[error("normalization factor of state {state} vanishes: the state is annihilated by antisymmetrization")]
    ZeroNormalization { state: usize },
    #[error("exchange overlap {value} of state {state} must lie in (-1, 1)")]
    InvalidOverlap { state: usize, value: f64 },
    #[error("only P = 1 or P = 2 can be realized explicitly, got P = {0}")]
    UnsupportedPermutationCount(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("configuration error: {0}")]
    Config(String),
}

/// A single non-symmetrized product state `Φ_n^(p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductState {
    pub state: usize,
    pub permutation: usize,
    pub energy: f64,
    /// Orbital label per electron slot; empty for abstract toy states.
    pub orbitals: Vec<String>,
    pub spin: Option<SpinFunction>,
    /// Plane-wave factor of relative motion, if any.
    pub wave_vector: Option<[f64; 3]>,
}

/// `Ψ_n = (1/f_n) Σ_p (-1)^{g_p} Φ_n^(p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AntisymmetrizedState {
    pub index: usize,
    pub normalization: f64,
    pub terms: Vec<(i32, ProductState)>,
}

/// Weight in the resolution of the identity `Σ_n |Ψ_n⟩ w_n ⟨Φ_n^(0)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum CompletenessWeight {
    /// `w_n = f_n / P` as in the exchange-theory resolution of the identity.
    Printed,
    /// `w_n = 1`, dual to the normalization `⟨Φ_n^(0)|Ψ_n⟩ = 1`.
    Dual,
}

/// Both sides of `(Φ_n^(0)|V|Ψ_i) = (f_n/f_i) ⟨Ψ_n|V|Φ_i^(0)⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
}

/// Explicit finite realization of a truncated exchange basis.
#[derive(Debug, Clone)]
pub struct ExchangeBasis {
    energies: Vec<f64>,
    group: Vec<Permutation>,
    parities: Vec<i32>,
    /// Ambient matrices of the inter-center permutations.
    reps: Vec<DMatrix<f64>>,
    /// `Φ_n^(0)` as ambient vectors.
    states: Vec<DVector<f64>>,
    overlaps: OverlapModel,
}

impl ExchangeBasis {
    /// Basis without exchange: `P = 1`, orthonormal states, `f_n = 1`.
    pub fn without_exchange(energies: Vec<f64>) -> Self {
        let n = energies.len();
        let states = (0..n)
            .map(|k| DVector::from_fn(n, |i, _| if i == k { 1.0 } else { 0.0 }))
            .collect();
        let group = vec![Permutation::identity(1)];
        let overlaps =
            OverlapModel::new(group.clone(), vec![1], vec![vec![1.0]; n]).expect("identity group");
        Self {
            energies,
            group,
            parities: vec![1],
            reps: vec![DMatrix::identity(n, n)],
            states,
            overlaps,
        }
    }

    /// Two-center basis with one inter-center transposition (`P = 2`).
    /// State `n` overlaps its exchanged copy by `exchange_overlaps[n]`.
    ///
    /// Each state gets a two-dimensional block spanned by a symmetric and an
    /// antisymmetric unit vector `u_n`, `w_n`; the transposition acts as
    /// `diag(1, -1)` on every block and `Φ_n = cos θ u_n + sin θ w_n` with
    /// `cos 2θ = S_n`.
    pub fn with_transposition(
        energies: Vec<f64>,
        exchange_overlaps: &[f64],
    ) -> Result<Self, BasisError> {
        let n = energies.len();
        if exchange_overlaps.len() != n {
            return Err(BasisError::DimensionMismatch {
                expected: n,
                got: exchange_overlaps.len(),
            });
        }
        let dim = 2 * n;
        let mut swap = DMatrix::identity(dim, dim);
        let mut states = Vec::with_capacity(n);
        for (k, &s) in exchange_overlaps.iter().enumerate() {
            if !(s > -1.0 && s < 1.0) {
                return Err(BasisError::InvalidOverlap { state: k, value: s });
            }
            swap[(2 * k + 1, 2 * k + 1)] = -1.0;
            let theta = 0.5 * s.acos();
            let mut v = DVector::zeros(dim);
            v[2 * k] = theta.cos();
            v[2 * k + 1] = theta.sin();
            states.push(v);
        }
        let group = vec![
            Permutation::identity(2),
            Permutation::cycle(2, &[1, 2]).expect("valid cycle"),
        ];
        let overlaps = OverlapModel::new(
            group.clone(),
            vec![1, -1],
            exchange_overlaps.iter().map(|&s| vec![1.0, s]).collect(),
        )?;
        Ok(Self {
            energies,
            group,
            parities: vec![1, -1],
            reps: vec![DMatrix::identity(dim, dim), swap],
            states,
            overlaps,
        })
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn permutation_count(&self) -> usize {
        self.group.len()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.reps[0].nrows()
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn overlap_model(&self) -> &OverlapModel {
        &self.overlaps
    }

    fn check_state(&self, n: usize) -> Result<(), BasisError> {
        if n >= self.states.len() {
            return Err(BasisError::StateOutOfRange {
                index: n,
                count: self.states.len(),
            });
        }
        Ok(())
    }

    fn check_perm(&self, p: usize) -> Result<(), BasisError> {
        if p >= self.group.len() {
            return Err(BasisError::PermutationOutOfRange {
                index: p,
                count: self.group.len(),
            });
        }
        Ok(())
    }

    /// Normalization factor `f_n = Σ_p (-1)^{g_p} S_n^(p)`.
    pub fn normalization(&self, n: usize) -> Result<f64, BasisError> {
        self.check_state(n)?;
        self.overlaps.normalization(n)
    }

    /// `Φ_n^(p)` as an ambient vector.
    pub fn product_vector(&self, n: usize, p: usize) -> Result<DVector<Complex64>, BasisError> {
        self.check_state(n)?;
        self.check_perm(p)?;
        Ok((&self.reps[p] * &self.states[n]).map(|x| Complex64::new(x, 0.0)))
    }

    pub fn product_state(&self, n: usize, p: usize) -> Result<ProductState, BasisError> {
        self.check_state(n)?;
        self.check_perm(p)?;
        Ok(ProductState {
            state: n,
            permutation: p,
            energy: self.energies[n],
            orbitals: Vec::new(),
            spin: None,
            wave_vector: None,
        })
    }

    pub fn antisymmetrized_state(&self, n: usize) -> Result<AntisymmetrizedState, BasisError> {
        let f = self.normalization(n)?;
        let terms = (0..self.group.len())
            .map(|p| Ok((self.parities[p], self.product_state(n, p)?)))
            .collect::<Result<_, BasisError>>()?;
        Ok(AntisymmetrizedState {
            index: n,
            normalization: f,
            terms,
        })
    }

    /// `Ψ_n` as an ambient vector.
    pub fn antisymmetrized_vector(&self, n: usize) -> Result<DVector<Complex64>, BasisError> {
        let f = self.normalization(n)?;
        let mut v = DVector::zeros(self.ambient_dimension());
        for p in 0..self.group.len() {
            v += self.product_vector(n, p)? * Complex64::new(self.parities[p] as f64 / f, 0.0);
        }
        Ok(v)
    }

    /// Truncated-model overlap `(Φ_m^(p)|Φ_n^(p')) = δ_mn S_n^(p^-1 p')`.
    pub fn overlap(&self, m: usize, p: usize, n: usize, p2: usize) -> Result<f64, BasisError> {
        self.check_state(m)?;
        self.check_state(n)?;
        self.check_perm(p)?;
        self.check_perm(p2)?;
        if m != n {
            return Ok(0.0);
        }
        let rel = self.group[p].inverse().compose(&self.group[p2]);
        let k = self
            .group
            .iter()
            .position(|g| *g == rel)
            .expect("group is closed");
        Ok(self.overlaps.value(n, k))
    }

    /// The same overlap evaluated from the ambient vectors.
    pub fn exact_overlap(
        &self,
        m: usize,
        p: usize,
        n: usize,
        p2: usize,
    ) -> Result<f64, BasisError> {
        Ok(self
            .product_vector(m, p)?
            .dotc(&self.product_vector(n, p2)?)
            .re)
    }

    /// `Λ^(p) Ψ_i = (-1)^{g_p} Φ_i^(p)`.
    pub fn lambda_project(&self, p: usize, i: usize) -> Result<(i32, ProductState), BasisError> {
        Ok((
            self.parities
                .get(p)
                .copied()
                .ok_or(BasisError::PermutationOutOfRange {
                    index: p,
                    count: self.group.len(),
                })?,
            self.product_state(i, p)?,
        ))
    }

    /// Vector form of [`ExchangeBasis::lambda_project`].
    pub fn lambda_project_vector(
        &self,
        p: usize,
        i: usize,
    ) -> Result<DVector<Complex64>, BasisError> {
        let (sign, _) = self.lambda_project(p, i)?;
        Ok(self.product_vector(i, p)? * Complex64::new(sign as f64, 0.0))
    }

    /// `Ô_i v = v - |Ψ_i⟩⟨Φ_i^(0)|v⟩`.
    pub fn skew_project_o(
        &self,
        i: usize,
        v: &DVector<Complex64>,
    ) -> Result<DVector<Complex64>, BasisError> {
        self.check_dim(v)?;
        let phi = self.product_vector(i, 0)?;
        let psi = self.antisymmetrized_vector(i)?;
        Ok(v - psi * phi.dotc(v))
    }

    fn check_dim(&self, v: &DVector<Complex64>) -> Result<(), BasisError> {
        if v.len() != self.ambient_dimension() {
            return Err(BasisError::DimensionMismatch {
                expected: self.ambient_dimension(),
                got: v.len(),
            });
        }
        Ok(())
    }

    /// `‖(Σ_n |Ψ_n⟩ w_n ⟨Φ_n^(0)| - 1) v‖`.
    pub fn completeness_residual(
        &self,
        v: &DVector<Complex64>,
        weight: CompletenessWeight,
    ) -> Result<f64, BasisError> {
        self.check_dim(v)?;
        let p = self.group.len() as f64;
        let mut acc = DVector::zeros(v.len());
        for n in 0..self.states.len() {
            let w = match weight {
                CompletenessWeight::Printed => self.normalization(n)? / p,
                CompletenessWeight::Dual => 1.0,
            };
            let amp = self.product_vector(n, 0)?.dotc(v) * w;
            acc += self.antisymmetrized_vector(n)? * amp;
        }
        Ok((acc - v).norm())
    }

    /// Checks `(Φ_n^(0)|V|Ψ_i) = (f_n/f_i) ⟨Ψ_n|V|Φ_i^(0)⟩` for an ambient
    /// operator `V`. Holds when `V` commutes with the permutations.
    pub fn matrix_element_identity_check(
        &self,
        n: usize,
        i: usize,
        v_op: &DMatrix<Complex64>,
    ) -> Result<IdentityCheck, BasisError> {
        let dim = self.ambient_dimension();
        if v_op.nrows() != dim || v_op.ncols() != dim {
            return Err(BasisError::DimensionMismatch {
                expected: dim,
                got: v_op.nrows(),
            });
        }
        let lhs = self
            .product_vector(n, 0)?
            .dotc(&(v_op * self.antisymmetrized_vector(i)?));
        let ratio = self.normalization(n)? / self.normalization(i)?;
        let rhs = self
            .antisymmetrized_vector(n)?
            .dotc(&(v_op * self.product_vector(i, 0)?))
            * ratio;
        Ok(IdentityCheck {
            lhs,
            rhs,
            residual: (lhs - rhs).norm(),
        })
    }

    /// Matrix `M[n][m] = ⟨Ψ_n|V|Φ_m^(0)⟩` that drives the amplitude equations.
    pub fn exchange_matrix(
        &self,
        v_op: &DMatrix<Complex64>,
    ) -> Result<DMatrix<Complex64>, BasisError> {
        let n = self.states.len();
        let mut m = DMatrix::zeros(n, n);
        for a in 0..n {
            let psi = self.antisymmetrized_vector(a)?;
            for b in 0..n {
                m[(a, b)] = psi.dotc(&(v_op * self.product_vector(b, 0)?));
            }
        }
        Ok(m)
    }

    /// Symmetrize an ambient operator over the permutation group so that it
    /// commutes with every permutation.
    pub fn symmetrize(&self, v_op: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        let mut acc = DMatrix::zeros(v_op.nrows(), v_op.ncols());
        for r in &self.reps {
            let rc = r.map(|x| Complex64::new(x, 0.0));
            acc += &rc * v_op * rc.transpose();
        }
        acc / Complex64::new(self.reps.len() as f64, 0.0)
    }
}
