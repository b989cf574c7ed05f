//! Complete elliptic integral of the first kind via the arithmetic–geometric mean.

use std::f64::consts::PI;

const MAX_ITER: usize = 40;
const EPSILON: f64 = 1e-15;

/// Arithmetic–geometric mean of `a` and `b` (both positive).
///
/// Returns the mean and the number of iterations taken to reach
/// `|a − g| < 1e−15 · max(1, a)`.
pub fn agm(mut a: f64, mut g: f64) -> (f64, usize) {
    let mut iterations = 0;
    while (a - g).abs() >= EPSILON * a.max(1.0) && iterations < MAX_ITER {
        let next_a = 0.5 * (a + g);
        g = (a * g).sqrt();
        a = next_a;
        iterations += 1;
    }
    (0.5 * (a + g), iterations)
}

/// `K(m) = ∫₀^{π/2} dθ / √(1 − m sin²θ)` for `m < 1` (parameter convention, `m = k²`).
///
/// `K(m) = π / (2 · AGM(1, √(1 − m)))`.
pub fn elliptic_k(m: f64) -> f64 {
    if m >= 1.0 {
        return f64::INFINITY;
    }
    let (mean, _) = agm(1.0, (1.0 - m).sqrt());
    PI / (2.0 * mean)
}
