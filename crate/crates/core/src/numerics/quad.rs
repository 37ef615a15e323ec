//! Adaptive 21-point Gauss-Kronrod quadrature.
//!
//! The driver keeps a max-heap of subintervals keyed by their error estimate
//! and bisects the worst one until the summed error meets the tolerance.

use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use super::NumericsError;

/// Values that can be integrated: real or complex scalars.
pub trait QuadValue:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> + Send + Sync
{
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
    fn is_finite_value(&self) -> bool;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn is_finite_value(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Result of a quadrature: value, estimated absolute error, and the number of
/// integrand evaluations spent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<V = f64> {
    pub value: V,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Tolerances for the adaptive driver. Convergence means
/// `error <= max(abs_tol, rel_tol * |I|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl QuadOptions {
    /// `tol` used both as absolute and relative target.
    pub fn with_tol(tol: f64) -> Self {
        Self {
            abs_tol: tol,
            rel_tol: tol,
            max_subdivisions: crate::tolerances::MAX_SUBDIVISIONS,
        }
    }

    pub fn new(abs_tol: f64, rel_tol: f64) -> Self {
        Self {
            abs_tol,
            rel_tol,
            max_subdivisions: crate::tolerances::MAX_SUBDIVISIONS,
        }
    }
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self::with_tol(crate::tolerances::QUAD_TOL)
    }
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_636_592_352,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// One 21-point Kronrod panel with its embedded 10-point Gauss estimate.
fn gk21<V, F>(f: &F, a: f64, b: f64) -> Result<(V, f64), NumericsError>
where
    V: QuadValue,
    F: Fn(f64) -> V + ?Sized,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    if !fc.is_finite_value() {
        return Err(NumericsError::NonFinite { x: center });
    }
    let mut kronrod = fc * WGK[10];
    let mut gauss = V::zero();
    let mut fv = [V::zero(); 20];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        if !f1.is_finite_value() {
            return Err(NumericsError::NonFinite { x: center - dx });
        }
        if !f2.is_finite_value() {
            return Err(NumericsError::NonFinite { x: center + dx });
        }
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        kronrod = kronrod + (f1 + f2) * WGK[j];
        if j % 2 == 1 {
            gauss = gauss + (f1 + f2) * WG[j / 2];
        }
    }
    // QUADPACK-style error heuristic based on the deviation from the mean.
    let mean = kronrod * 0.5;
    let mut resasc = WGK[10] * (fc - mean).magnitude();
    for j in 0..10 {
        resasc += WGK[j] * ((fv[2 * j] - mean).magnitude() + (fv[2 * j + 1] - mean).magnitude());
    }
    resasc *= half.abs();
    let mut err = ((kronrod - gauss) * half).magnitude();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    let value = kronrod * half;
    let roundoff = 50.0 * f64::EPSILON * value.magnitude();
    Ok((value, err.max(roundoff)))
}

struct Panel<V> {
    a: f64,
    b: f64,
    value: V,
    error: f64,
}

impl<V> PartialEq for Panel<V> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<V> Eq for Panel<V> {}
impl<V> PartialOrd for Panel<V> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl<V> Ord for Panel<V> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Adaptive integration of `f` over the finite interval `[a, b]`.
pub fn integrate<V, F>(
    f: &F,
    a: f64,
    b: f64,
    opts: &QuadOptions,
) -> Result<QuadratureResult<V>, NumericsError>
where
    V: QuadValue,
    F: Fn(f64) -> V + ?Sized,
{
    integrate_with_breaks(f, &[a, b], opts)
}

/// Adaptive integration over consecutive intervals delimited by `breaks`.
/// Known kinks or peaks should be placed at breakpoints.
pub fn integrate_with_breaks<V, F>(
    f: &F,
    breaks: &[f64],
    opts: &QuadOptions,
) -> Result<QuadratureResult<V>, NumericsError>
where
    V: QuadValue,
    F: Fn(f64) -> V + ?Sized,
{
    if breaks.len() < 2 {
        return Err(NumericsError::InvalidInterval);
    }
    if breaks.iter().any(|x| !x.is_finite()) {
        return Err(NumericsError::InvalidInterval);
    }
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0usize;
    let mut total = V::zero();
    let mut total_err = 0.0;
    for w in breaks.windows(2) {
        if w[0] == w[1] {
            continue;
        }
        let (value, error) = gk21(f, w[0], w[1])?;
        evaluations += 21;
        total = total + value;
        total_err += error;
        heap.push(Panel {
            a: w[0],
            b: w[1],
            value,
            error,
        });
    }
    let mut subdivisions = heap.len();
    loop {
        let target = opts
            .abs_tol
            .max(opts.rel_tol.max(100.0 * f64::EPSILON) * total.magnitude());
        if total_err <= target {
            break;
        }
        if subdivisions >= opts.max_subdivisions {
            return Err(NumericsError::MaxSubdivisions {
                value: total.magnitude(),
                error_estimate: total_err,
                evaluations,
            });
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => break,
        };
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a.min(worst.b) || mid >= worst.a.max(worst.b) {
            // Interval cannot be split further in floating point.
            heap.push(worst);
            return Err(NumericsError::MaxSubdivisions {
                value: total.magnitude(),
                error_estimate: total_err,
                evaluations,
            });
        }
        let (v1, e1) = gk21(f, worst.a, mid)?;
        let (v2, e2) = gk21(f, mid, worst.b)?;
        evaluations += 42;
        subdivisions += 1;
        total = total - worst.value + v1 + v2;
        total_err = total_err - worst.error + e1 + e2;
        heap.push(Panel {
            a: worst.a,
            b: mid,
            value: v1,
            error: e1,
        });
        heap.push(Panel {
            a: mid,
            b: worst.b,
            value: v2,
            error: e2,
        });
    }
    // Re-sum to shed accumulated cancellation from the running updates.
    let mut value = V::zero();
    let mut error = 0.0;
    for p in heap.iter() {
        value = value + p.value;
        error += p.error;
    }
    Ok(QuadratureResult {
        value,
        error_estimate: error,
        evaluations,
    })
}

/// Integral over `[a, inf)` through the map `x = a + t/(1-t)`.
pub fn integrate_semi_infinite<V, F>(
    f: &F,
    a: f64,
    opts: &QuadOptions,
) -> Result<QuadratureResult<V>, NumericsError>
where
    V: QuadValue,
    F: Fn(f64) -> V + ?Sized,
{
    integrate_semi_infinite_with_breaks(f, a, &[], opts)
}

/// As [`integrate_semi_infinite`] with extra breakpoints given in `x`.
pub fn integrate_semi_infinite_with_breaks<V, F>(
    f: &F,
    a: f64,
    x_breaks: &[f64],
    opts: &QuadOptions,
) -> Result<QuadratureResult<V>, NumericsError>
where
    V: QuadValue,
    F: Fn(f64) -> V + ?Sized,
{
    let mapped = |t: f64| {
        let one_minus = 1.0 - t;
        let x = a + t / one_minus;
        if !x.is_finite() || x > crate::tolerances::SEMI_INFINITE_CUTOFF {
            return V::zero();
        }
        let jac = 1.0 / (one_minus * one_minus);
        let v = f(x);
        if v.magnitude() < crate::tolerances::NEGLIGIBLE_INTEGRAND {
            V::zero()
        } else {
            v * jac
        }
    };
    let mut breaks = vec![0.0];
    let mut extra: Vec<f64> = x_breaks
        .iter()
        .filter(|&&x| x > a && x.is_finite())
        .map(|&x| (x - a) / (1.0 + x - a))
        .collect();
    extra.sort_by(|p, q| p.total_cmp(q));
    breaks.extend(extra);
    breaks.push(1.0);
    integrate_with_breaks(&mapped, &breaks, opts)
}

/// Fixed-order Gauss-Legendre nodes and weights on `[-1, 1]`
/// computed by Newton iteration on the Legendre polynomial.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = 0.0;
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) as f64 * z * p1 - j as f64 * p2) / (j + 1) as f64;
            }
            dp = n as f64 * (z * p0 - p1) / (z * z - 1.0);
            let dz = p0 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let r = integrate(
            &|x: f64| x.powi(7) - 3.0 * x * x,
            -1.0,
            2.0,
            &QuadOptions::with_tol(1e-13),
        )
        .unwrap();
        let exact = (2f64.powi(8) - 1.0) / 8.0 - (8.0 + 1.0);
        assert!((r.value - exact).abs() < 1e-12);
    }

    #[test]
    fn peaked_integrand_converges() {
        let f = |x: f64| 1.0 / (1e-4 + x * x);
        let r = integrate(&f, -1.0, 1.0, &QuadOptions::with_tol(1e-11)).unwrap();
        let exact = 2.0 * (1.0 / 1e-2) * (1.0f64 / 1e-2).atan();
        assert!((r.value - exact).abs() / exact < 1e-10);
    }

    #[test]
    fn semi_infinite_exponential() {
        let r = integrate_semi_infinite(
            &|x: f64| (-x).exp() * x * x,
            0.0,
            &QuadOptions::with_tol(1e-12),
        )
        .unwrap();
        assert!((r.value - 2.0).abs() < 1e-11);
    }

    #[test]
    fn complex_integrand() {
        let w = 3.0;
        let f = |t: f64| Complex64::new(0.0, w * t).exp();
        let r = integrate(&f, 0.0, 2.0, &QuadOptions::with_tol(1e-12)).unwrap();
        let exact = (Complex64::new(0.0, 2.0 * w).exp() - 1.0) / Complex64::new(0.0, w);
        assert!((r.value - exact).norm() < 1e-12);
    }

    #[test]
    fn subdivision_cap_reports_best_estimate() {
        let opts = QuadOptions {
            abs_tol: 1e-15,
            rel_tol: 1e-15,
            max_subdivisions: 3,
        };
        let err = integrate(&|x: f64| x.abs().sqrt().sin(), -1.0, 1.0, &opts).unwrap_err();
        assert!(matches!(err, NumericsError::MaxSubdivisions { .. }));
    }

    #[test]
    fn gauss_legendre_integrates_degree_2n_minus_1() {
        let (x, w) = gauss_legendre(12);
        let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(22)).sum();
        assert!((s - 2.0 / 23.0).abs() < 1e-14);
    }
}
