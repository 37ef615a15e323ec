#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use xpt_core::basis::ProfileConfig;
use xpt_core::tdept::PerturbationSpec;

/// Exact exponential polynomial `Σ c t^m exp(i λ t)`, closed under
/// multiplication by `exp(i ν t)` and under `∫_0^t`.
#[derive(Debug, Clone, Default)]
pub struct ExpPoly {
    pub terms: Vec<(Complex64, u32, f64)>,
}

impl ExpPoly {
    pub fn constant(c: Complex64) -> Self {
        Self {
            terms: vec![(c, 0, 0.0)],
        }
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|(c, m, l)| c * t.powi(*m as i32) * Complex64::from_polar(1.0, l * t))
            .sum()
    }

    pub fn times_exp(&self, c: Complex64, nu: f64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(a, m, l)| (a * c, *m, clean(l + nu)))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }
    }

    /// `∫_0^t` of the polynomial.
    pub fn integral(&self) -> Self {
        let mut out = Vec::new();
        for &(c, m, l) in &self.terms {
            out.extend(integral_term(c, m, l));
        }
        Self { terms: out }
    }
}

fn clean(l: f64) -> f64 {
    if l.abs() < 1e-12 {
        0.0
    } else {
        l
    }
}

fn integral_term(c: Complex64, m: u32, l: f64) -> Vec<(Complex64, u32, f64)> {
    if l == 0.0 {
        return vec![(c / (m + 1) as f64, m + 1, 0.0)];
    }
    let il = Complex64::new(0.0, l);
    // I_m = t^m e^{ilt}/(il) - (m/(il)) I_{m-1},  I_0 = (e^{ilt} - 1)/(il)
    let mut out = vec![(c / il, m, l)];
    if m == 0 {
        out.push((-c / il, 0, 0.0));
    } else {
        out.extend(integral_term(-c * m as f64 / il, m - 1, l));
    }
    out
}

/// Standard (exchange-free) or exchange-weighted perturbation theory for
/// `V(t) = V Σ_k a_k exp(i ν_k t)` computed in closed form: the amplitude of
/// order `order` for every final state.
pub fn exact_order(
    energies: &[f64],
    link: &[f64],
    v: &DMatrix<Complex64>,
    drive: &[(Complex64, f64)],
    initial: usize,
    order: usize,
) -> Vec<ExpPoly> {
    let n = energies.len();
    let mut y: Vec<ExpPoly> = (0..n)
        .map(|m| {
            if m == initial {
                ExpPoly::constant(Complex64::new(1.0, 0.0))
            } else {
                ExpPoly::default()
            }
        })
        .collect();
    for _ in 0..order {
        let mut next = Vec::with_capacity(n);
        for a in 0..n {
            let mut acc = ExpPoly::default();
            for b in 0..n {
                for &(amp, nu) in drive {
                    let c = Complex64::new(0.0, -link[a]) * v[(a, b)] * amp;
                    acc = acc.add(&y[b].times_exp(c, energies[a] - energies[b] + nu));
                }
            }
            next.push(acc.integral());
        }
        y = next;
    }
    y
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Three-state hermitian toy matrix.
pub fn three_state_matrix() -> DMatrix<Complex64> {
    DMatrix::from_row_slice(
        3,
        3,
        &[
            c(0.10, 0.0),
            c(0.30, 0.05),
            c(0.20, 0.0),
            c(0.30, -0.05),
            c(-0.05, 0.0),
            c(0.15, -0.10),
            c(0.20, 0.0),
            c(0.15, 0.10),
            c(0.07, 0.0),
        ],
    )
}

pub fn two_state_matrix() -> DMatrix<Complex64> {
    DMatrix::from_row_slice(
        2,
        2,
        &[c(0.2, 0.0), c(1.0, 0.3), c(1.0, -0.3), c(-0.1, 0.0)],
    )
}

pub fn spec(
    energies: Vec<f64>,
    f: Vec<f64>,
    p: usize,
    v: DMatrix<Complex64>,
    profile: ProfileConfig,
) -> PerturbationSpec {
    PerturbationSpec::from_matrix(energies, f, p, v, profile).unwrap()
}

/// Least-squares slope of log10(y) against log10(x).
pub fn loglog_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.log10()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.log10()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let num: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let den: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    num / den
}
