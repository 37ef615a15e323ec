//! The symmetric time-ordered form: `(1/n!) ∫_0^t…∫_0^t τ{…} dt_1…dt_n`.
//!
//! The cube is split into its `n!` ordering simplices. On each, points come
//! from a Duffy-mapped tensor Gauss-Legendre rule; at every point the times
//! are sorted and the chain is evaluated with later times to the left.

use num_complex::Complex64;

use super::{PerturbationSpec, TdeptError};
use crate::numerics::gauss_legendre;
use crate::permsym::Permutation;

const MINUS_I: Complex64 = Complex64::new(0.0, -1.0);

/// Chain sum `Σ_{n_1..n_{k-1}} Π link · W(t_sorted)` for times sorted in
/// decreasing order, final state `n`, initial `i`.
fn chain(spec: &PerturbationSpec, n: usize, i: usize, times_desc: &[f64]) -> Complex64 {
    let k = times_desc.len();
    let dim = spec.dimension();
    // Right to left: vector over intermediate states after the earliest link.
    let mut v: Vec<Complex64> = (0..dim)
        .map(|m| MINUS_I * spec.link_factor(m) * spec.w_element(m, i, times_desc[k - 1]))
        .collect();
    for level in (0..k - 1).rev() {
        let t = times_desc[level];
        v = (0..dim)
            .map(|a| {
                let s: Complex64 = (0..dim).map(|b| spec.w_element(a, b, t) * v[b]).sum();
                MINUS_I * spec.link_factor(a) * s
            })
            .collect();
    }
    v[n]
}

/// Order-`order` amplitude from the symmetric time-ordered integral, with
/// `points` Gauss-Legendre nodes per dimension (split into `panels` panels).
pub fn time_ordered_symmetric_amplitude(
    spec: &PerturbationSpec,
    n: usize,
    i: usize,
    order: usize,
    t: f64,
    points: usize,
    panels: usize,
) -> Result<Complex64, TdeptError> {
    spec.check_state(n)?;
    spec.check_state(i)?;
    if order == 0 {
        return Ok(if n == i {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        });
    }
    if order > 6 {
        return Err(TdeptError::OrderTooHigh { order, max: 6 });
    }
    if t == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let (x, w) = gauss_legendre(points.max(2));
    let panels = panels.max(1);
    // 1-D rule on [0, 1]
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    for p in 0..panels {
        let a = p as f64 / panels as f64;
        let h = 1.0 / panels as f64;
        for (xi, wi) in x.iter().zip(&w) {
            nodes.push(a + 0.5 * h * (xi + 1.0));
            weights.push(0.5 * h * wi);
        }
    }
    let m = nodes.len();
    let orderings = Permutation::all(order);
    let mut total = Complex64::new(0.0, 0.0);
    let mut idx = vec![0usize; order];
    let mut times = vec![0.0; order];
    let mut sorted = vec![0.0; order];
    loop {
        // Duffy map of the unit cube onto t > s_1 > s_2 > ... > s_order > 0.
        let mut jac = 1.0;
        let mut s = t;
        let mut simplex_point = vec![0.0; order];
        for d in 0..order {
            let u = nodes[idx[d]];
            jac *= weights[idx[d]] * s;
            s *= u;
            simplex_point[d] = s;
        }
        // simplex_point is decreasing; scatter it into every ordering.
        for sigma in &orderings {
            for d in 0..order {
                times[sigma.image(d)] = simplex_point[d];
            }
            sorted.copy_from_slice(&times);
            sorted.sort_by(|a, b| b.total_cmp(a));
            total += chain(spec, n, i, &sorted) * jac;
        }
        // next multi-index
        let mut d = 0;
        loop {
            if d == order {
                let fact: f64 = (1..=order).map(|k| k as f64).product();
                return Ok(total / fact);
            }
            idx[d] += 1;
            if idx[d] < m {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}
