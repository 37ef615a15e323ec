//! Piecewise Chebyshev interpolants of complex functions of time, with exact
//! antiderivatives. Used to evaluate nested time integrals innermost-first.

use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct PiecewiseChebyshev {
    edges: Vec<f64>,
    // coeffs[p][k]: coefficient of T_k on panel p
    coeffs: Vec<Vec<Complex64>>,
    degree: usize,
}

impl PiecewiseChebyshev {
    /// Interpolate `f` on `[t0, t1]` split into `panels` equal panels, each
    /// sampled at `degree + 1` Chebyshev-Lobatto points.
    pub fn sample<F: Fn(f64) -> Complex64>(
        f: F,
        t0: f64,
        t1: f64,
        panels: usize,
        degree: usize,
    ) -> Self {
        let panels = panels.max(1);
        let degree = degree.max(2);
        let edges: Vec<f64> = (0..=panels)
            .map(|p| t0 + (t1 - t0) * p as f64 / panels as f64)
            .collect();
        let coeffs = edges
            .windows(2)
            .map(|w| {
                let mid = 0.5 * (w[0] + w[1]);
                let half = 0.5 * (w[1] - w[0]);
                let values: Vec<Complex64> = (0..=degree)
                    .map(|j| f(mid + half * node(j, degree)))
                    .collect();
                values_to_coeffs(&values)
            })
            .collect();
        Self {
            edges,
            coeffs,
            degree,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn start(&self) -> f64 {
        self.edges[0]
    }

    pub fn end(&self) -> f64 {
        *self.edges.last().expect("at least one panel")
    }

    /// Interpolation nodes of every panel, in increasing time order with
    /// shared panel edges repeated once per panel.
    pub fn nodes(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for w in self.edges.windows(2) {
            let mid = 0.5 * (w[0] + w[1]);
            let half = 0.5 * (w[1] - w[0]);
            for j in (0..=self.degree).rev() {
                out.push(mid + half * node(j, self.degree));
            }
        }
        out
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        let n_panels = self.coeffs.len();
        let width = (self.end() - self.start()) / n_panels as f64;
        let mut p = if width > 0.0 {
            ((t - self.start()) / width).floor() as isize
        } else {
            0
        };
        p = p.clamp(0, n_panels as isize - 1);
        let p = p as usize;
        let mid = 0.5 * (self.edges[p] + self.edges[p + 1]);
        let half = 0.5 * (self.edges[p + 1] - self.edges[p]);
        clenshaw(&self.coeffs[p], (t - mid) / half)
    }

    /// Antiderivative vanishing at the start of the range.
    pub fn antiderivative(&self) -> Self {
        let mut offset = Complex64::new(0.0, 0.0);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (p, c) in self.coeffs.iter().enumerate() {
            let half = 0.5 * (self.edges[p + 1] - self.edges[p]);
            let n = c.len();
            let mut d = vec![Complex64::new(0.0, 0.0); n + 1];
            for (k, ck) in c.iter().enumerate() {
                match k {
                    0 => d[1] += *ck,
                    1 => d[2] += *ck * 0.25,
                    _ => {
                        d[k + 1] += *ck / (2.0 * (k + 1) as f64);
                        d[k - 1] -= *ck / (2.0 * (k - 1) as f64);
                    }
                }
            }
            for dk in d.iter_mut() {
                *dk *= half;
            }
            // value at x = -1
            let at_left = d
                .iter()
                .enumerate()
                .fold(Complex64::new(0.0, 0.0), |acc, (k, dk)| {
                    if k % 2 == 0 {
                        acc + dk
                    } else {
                        acc - dk
                    }
                });
            d[0] += offset - at_left;
            offset = d.iter().fold(Complex64::new(0.0, 0.0), |acc, dk| acc + dk);
            coeffs.push(d);
        }
        Self {
            edges: self.edges.clone(),
            coeffs,
            degree: self.degree,
        }
    }
}

fn node(j: usize, n: usize) -> f64 {
    (PI * j as f64 / n as f64).cos()
}

fn values_to_coeffs(values: &[Complex64]) -> Vec<Complex64> {
    let n = values.len() - 1;
    let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
    for (k, ck) in c.iter_mut().enumerate() {
        let mut s = Complex64::new(0.0, 0.0);
        for (j, v) in values.iter().enumerate() {
            let w = if j == 0 || j == n { 0.5 } else { 1.0 };
            s += *v * (w * (PI * (k * j) as f64 / n as f64).cos());
        }
        let scale = if k == 0 || k == n {
            1.0 / n as f64
        } else {
            2.0 / n as f64
        };
        *ck = s * scale;
    }
    c
}

fn clenshaw(c: &[Complex64], x: f64) -> Complex64 {
    let mut b1 = Complex64::new(0.0, 0.0);
    let mut b2 = Complex64::new(0.0, 0.0);
    for ck in c.iter().skip(1).rev() {
        let b0 = *ck + b1 * (2.0 * x) - b2;
        b2 = b1;
        b1 = b0;
    }
    c[0] + b1 * x - b2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolates_and_integrates_oscillation() {
        let w = 2.3;
        let f = |t: f64| Complex64::new(0.0, w * t).exp();
        let cheb = PiecewiseChebyshev::sample(f, 0.0, 7.0, 4, 32);
        for &t in &[0.0, 0.3, 3.5, 6.99, 7.0] {
            assert!((cheb.eval(t) - f(t)).norm() < 1e-13);
        }
        let anti = cheb.antiderivative();
        for &t in &[0.0, 1.1, 4.0, 7.0] {
            let exact = (f(t) - 1.0) / Complex64::new(0.0, w);
            assert!((anti.eval(t) - exact).norm() < 1e-13, "t={t}");
        }
    }
}
