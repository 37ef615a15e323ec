/// Spherical Bessel function of order zero, `sin(x)/x`.
///
/// Below `|x| < 1e-4` the truncated Taylor series is used, which is exact to
/// double precision there and avoids the `0/0` at the origin.
pub fn j0(x: f64) -> f64 {
    if x.abs() < crate::tolerances::J0_SERIES_SWITCH {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}
