//! Non-perturbative T operator in a finite basis.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::{ScatteringError, ScatteringToy, TMatrixElement};

/// Which resolvent closes the operator equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ResolventMode {
    /// `T = V^N + V^N c⁻¹ (E - H₀ + iη)⁻¹ T`.
    Unperturbed,
    /// `T = V^N + V^N c⁻¹ (E - H₀ - V₀ + iη)⁻¹ V^N`.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum SolveMethod {
    /// LU factorization of the linear system.
    Direct,
    /// Successive approximations `T_{k+1} = V^N + V₀ G₀ T_k`
    /// (only meaningful for [`ResolventMode::Unperturbed`]).
    Iterative { max_iterations: usize, tol: f64 },
}

/// `T(E)` as a matrix over the toy basis.
#[derive(Debug, Clone, PartialEq)]
pub struct TOperator {
    pub matrix: DMatrix<Complex64>,
    pub energy: f64,
    pub eta: f64,
    pub mode: ResolventMode,
    /// Iterations used by the successive approximations, zero for direct solves.
    pub iterations: usize,
}

impl TOperator {
    pub fn element(&self, f: usize, i: usize) -> TMatrixElement {
        TMatrixElement {
            value: self.matrix[(f, i)],
            order: None,
            bra: f,
            ket: i,
        }
    }
}

const SINGULAR_CONDITION: f64 = 1e14;

fn condition_estimate(a: &DMatrix<Complex64>) -> f64 {
    let sv = a.clone().svd(false, false).singular_values;
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

fn solve(
    a: DMatrix<Complex64>,
    b: &DMatrix<Complex64>,
) -> Result<DMatrix<Complex64>, ScatteringError> {
    let cond = condition_estimate(&a);
    if !(cond < SINGULAR_CONDITION) {
        return Err(ScatteringError::Singular { condition: cond });
    }
    a.lu()
        .solve(b)
        .ok_or(ScatteringError::Singular { condition: cond })
}

/// Solves for the T operator at energy `energy` with `iη` regularization.
pub fn t_operator_solve(
    toy: &ScatteringToy,
    energy: f64,
    eta: f64,
    mode: ResolventMode,
    method: SolveMethod,
) -> Result<TOperator, ScatteringError> {
    if !(eta >= 0.0) || !energy.is_finite() {
        return Err(ScatteringError::InvalidArgument(format!(
            "need finite energy and eta >= 0, got E = {energy}, eta = {eta}"
        )));
    }
    let n = toy.dimension();
    let vn = toy.renormalized_v();
    let z = Complex64::new(energy, eta);
    let (matrix, iterations) = match (mode, method) {
        (ResolventMode::Unperturbed, SolveMethod::Direct) => {
            // (I - V₀ G₀) T = V^N with G₀ diagonal.
            let g0 = g0_diagonal(toy, z)?;
            let a = DMatrix::identity(n, n) - &toy.v * DMatrix::from_diagonal(&g0);
            (solve(a, &vn)?, 0)
        }
        (
            ResolventMode::Unperturbed,
            SolveMethod::Iterative {
                max_iterations,
                tol,
            },
        ) => {
            let g0 = DMatrix::from_diagonal(&g0_diagonal(toy, z)?);
            let kernel = &toy.v * g0;
            let mut t = vn.clone();
            let mut change = f64::INFINITY;
            let mut done = None;
            for it in 1..=max_iterations {
                let next = &vn + &kernel * &t;
                change = (&next - &t).norm();
                let scale = next.norm().max(f64::MIN_POSITIVE);
                t = next;
                if !change.is_finite() {
                    break;
                }
                if change <= tol * scale {
                    done = Some(it);
                    break;
                }
            }
            match done {
                Some(it) => (t, it),
                None => {
                    return Err(ScatteringError::NotConverged {
                        iterations: max_iterations,
                        change,
                    })
                }
            }
        }
        (ResolventMode::Full, SolveMethod::Direct) => {
            // (z - H₀ - V₀) X = V^N, T = V^N + V₀ X.
            let h0 = DMatrix::from_diagonal(&DVector::from_iterator(
                n,
                toy.energies.iter().map(|&e| Complex64::new(e, 0.0)),
            ));
            let a = DMatrix::identity(n, n) * z - h0 - &toy.v;
            let x = solve(a, &vn)?;
            (&vn + &toy.v * x, 0)
        }
        (ResolventMode::Full, SolveMethod::Iterative { .. }) => {
            return Err(ScatteringError::InvalidArgument(
                "the full-resolvent form is closed; use a direct solve".into(),
            ));
        }
    };
    Ok(TOperator {
        matrix,
        energy,
        eta,
        mode,
        iterations,
    })
}

fn g0_diagonal(toy: &ScatteringToy, z: Complex64) -> Result<DVector<Complex64>, ScatteringError> {
    let mut g = DVector::zeros(toy.dimension());
    for (k, &e) in toy.energies.iter().enumerate() {
        let d = z - e;
        if d.norm() == 0.0 {
            return Err(ScatteringError::RegularizationRequired {
                state: k,
                denominator: 0.0,
            });
        }
        g[k] = d.inv();
    }
    Ok(g)
}
