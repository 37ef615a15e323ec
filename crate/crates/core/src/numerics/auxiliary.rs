//! Closed-form two-center integrals of Slater-type factors through the
//! auxiliary functions `A_n(p)` and `B_n(t)`.
//!
//! With the proton at center A and the second nucleus at center B, a distance
//! `R` apart, `r_A = (R/2)(xi + eta)` and `r_B = (R/2)(xi - eta)`. Products of
//! powers and exponentials of `r_A`, `r_B` become polynomials in `xi`, `eta`
//! times `exp(-p xi - t eta)`, which integrate term by term.

use super::{NumericsError, Weight};

/// `A_n(p) = int_1^inf xi^n exp(-p xi) d xi` for `p > 0`.
pub fn aux_a(n: usize, p: f64) -> f64 {
    (-p).exp() * aux_a_scaled(n, p)
}

/// `e^p A_n(p)`.
fn aux_a_scaled(n: usize, p: f64) -> f64 {
    // n! / p^{n+1} * sum_{k<=n} p^k / k!
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..=n {
        term *= p / k as f64;
        sum += term;
    }
    let mut fact_over_pow = 1.0 / p;
    for k in 1..=n {
        fact_over_pow *= k as f64 / p;
    }
    fact_over_pow * sum
}

/// `B_n(t) = int_{-1}^{1} eta^n exp(-t eta) d eta`.
///
/// For small `|t|` a power series is summed (the upward recurrence loses all
/// precision there); otherwise the recurrence from integration by parts.
pub fn aux_b(n: usize, t: f64) -> f64 {
    t.abs().exp() * aux_b_scaled(n, t)
}

/// `e^{-|t|} B_n(t)`.
fn aux_b_scaled(n: usize, t: f64) -> f64 {
    if t.abs() <= 1.0 + 0.5 * n as f64 {
        let mut sum = 0.0;
        let mut coeff = 1.0; // (-t)^k / k!
        for k in 0..200 {
            let m = n + k + 1;
            if m % 2 == 1 {
                sum += coeff * 2.0 / m as f64;
            }
            coeff *= -t / (k + 1) as f64;
            if coeff.abs() < 1e-18 * sum.abs().max(1e-300) && k > n {
                break;
            }
        }
        sum * (-t.abs()).exp()
    } else {
        let (et, emt) = ((t - t.abs()).exp(), (-t - t.abs()).exp());
        let mut b = (et - emt) / t;
        for k in 1..=n {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            b = (sign * et - emt + k as f64 * b) / t;
        }
        b
    }
}

/// A Slater-type radial factor `r^power * exp(-exponent * r)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StoFactor {
    pub power: u32,
    pub exponent: f64,
}

impl StoFactor {
    pub fn new(power: u32, exponent: f64) -> Self {
        Self { power, exponent }
    }
}

fn binomial_row(n: usize) -> Vec<f64> {
    let mut row = vec![1.0; n + 1];
    for k in 1..n {
        row[k] = row[k - 1] * (n + 1 - k) as f64 / k as f64;
    }
    row
}

/// `int f_A(r_A) f_B(r_B) w d^3r` where `f_A`, `f_B` are Slater factors
/// centered on A and B and `w` is the weight.
pub fn sto_two_center(
    on_a: StoFactor,
    on_b: StoFactor,
    weight: Weight,
    r: f64,
) -> Result<f64, NumericsError> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(NumericsError::InvalidArgument(format!(
            "separation must be positive, got {r}"
        )));
    }
    let (da, db) = match weight {
        Weight::Unity => (0, 0),
        Weight::InverseRA => (1, 0),
        Weight::InverseRB => (0, 1),
    };
    // (xi+eta)^m1 (xi-eta)^m2 with the Jacobian factor (xi^2 - eta^2) absorbed.
    let m1 = on_a.power as usize + 1 - da;
    let m2 = on_b.power as usize + 1 - db;
    let deg = m1 + m2;
    let mut poly = vec![vec![0.0; deg + 1]; deg + 1]; // poly[i][j]: xi^i eta^j
    let b1 = binomial_row(m1);
    let b2 = binomial_row(m2);
    for (k1, c1) in b1.iter().enumerate() {
        for (k2, c2) in b2.iter().enumerate() {
            // (xi+eta)^m1 term: xi^(m1-k1) eta^k1 ; (xi-eta)^m2 term: xi^(m2-k2) (-eta)^k2
            let sign = if k2 % 2 == 0 { 1.0 } else { -1.0 };
            poly[m1 - k1 + m2 - k2][k1 + k2] += c1 * c2 * sign;
        }
    }
    let a = on_a.exponent;
    let b = on_b.exponent;
    let p = 0.5 * r * (a + b);
    if !(p > 0.0) {
        return Err(NumericsError::InvalidArgument(
            "sum of exponents must be positive".into(),
        ));
    }
    let t = 0.5 * r * (a - b);
    // Scaled forms keep e^{-p} and e^{|t|} apart, which would under- and
    // overflow separately at large separation.
    let a_vals: Vec<f64> = (0..=deg).map(|i| aux_a_scaled(i, p)).collect();
    let b_vals: Vec<f64> = (0..=deg).map(|j| aux_b_scaled(j, t)).collect();
    let mut sum = 0.0;
    for (i, row) in poly.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if *c != 0.0 {
                sum += c * a_vals[i] * b_vals[j];
            }
        }
    }
    let half = 0.5 * r;
    let scale = 2.0
        * std::f64::consts::PI
        * half.powi((3 + on_a.power + on_b.power) as i32 - (da + db) as i32);
    Ok(scale * sum * (t.abs() - p).exp())
}
