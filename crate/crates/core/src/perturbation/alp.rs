//! Squared-frequency expansion `ω² = 1 + Σ w_j λ^j`, treating ω as independent
//! of λ while expanding, then solving the truncated relation for ω.
//!
//! In the variable `τ = ωt` the order-`n` equation reads
//! `x_n″ + x_n = ω⁻² (−[x³]_{n−1} + Σ_j w_j x_{n−j})`. Substituting
//! `x_n = ω^{−2n} y_n` and `w_n = ω^{−2(n−1)} c_n` removes ω entirely, so the
//! recursion runs once in exact rationals and `w_n(ω)` follows by scaling.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::{check_order, eliminate_secular, Memory, SeriesSolution, MAX_ORDER};
use crate::error::{Error, Result};
use crate::period::{Diagnostics, MethodKind, PeriodEstimate, PeriodSource};
use crate::trig::{to_f64, Rational};

const OMEGA_TOL: f64 = 1e-12;
const DAMPING: f64 = 0.8;
const MAX_ITER: usize = 500;

/// ω-free ALP hierarchy; `coeffs[n−1] = c_n = w_n ω^{2(n−1)}`.
pub fn alp_series(order: usize) -> Result<SeriesSolution> {
    check_order(order, 1)?;
    let (solutions, mut coeffs) =
        eliminate_secular(order, &Rational::one(), &Rational::zero(), Memory::Displacement)?;
    coeffs.remove(0);
    let values = coeffs.iter().map(to_f64).collect();
    Ok(SeriesSolution { method: MethodKind::Alp, order, solutions, coeffs, values, alpha: None, omega: None })
}

fn scaled_coeffs() -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        alp_series(MAX_ORDER).expect("secular elimination is exact for the ALP hierarchy").values
    })
}

/// `w_1 ..= w_N` evaluated at the given frequency.
pub fn alp_coefficients(order: usize, omega: f64) -> Result<Vec<f64>> {
    check_order(order, 1)?;
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::Domain(format!("omega must be positive, got {omega}")));
    }
    let inv_sq = 1.0 / (omega * omega);
    Ok(scaled_coeffs()[..order].iter().enumerate().map(|(j, c)| c * inv_sq.powi(j as i32)).collect())
}

/// `1 + Σ_{j=1}^{N} w_j(ω) λ^j` as a function of `z = ω²`, written as
/// `1 + λ Σ c_j (λ/z)^{j−1}` to stay in range at large λ.
fn truncated_square(c: &[f64], lambda: f64, z: f64) -> f64 {
    let ratio = lambda / z;
    1.0 + lambda * c.iter().rev().fold(0.0, |acc, cj| acc * ratio + cj)
}

/// Solves `ω² = 1 + Σ_{j=1}^{N} w_j(ω) λ^j` and returns `T = 2π/ω`.
///
/// Damped fixed-point iteration from `ω₀ = √(1 + 3λ/4)`; if it fails to
/// contract, bisection on `g(ω) = ω² − 1 − Σ w_j(ω) λ^j` takes over.
pub fn alp_frequency(lambda: f64, order: usize) -> Result<PeriodEstimate> {
    check_order(order, 1)?;
    if !lambda.is_finite() || lambda <= -1.0 {
        return Err(Error::Domain(format!("coupling must satisfy lambda > -1, got {lambda}")));
    }
    let c = &scaled_coeffs()[..order];
    let omega = fixed_point(c, lambda).map_or_else(|| bisect(c, lambda), Ok)?;
    Ok(PeriodEstimate::new(2.0 * PI / omega, PeriodSource::Method(MethodKind::Alp), order, lambda)
        .with_diagnostics(Diagnostics { omega: Some(omega), ..Default::default() }))
}

fn fixed_point(c: &[f64], lambda: f64) -> Option<f64> {
    let mut omega = (1.0 + 0.75 * lambda).sqrt();
    let mut last_step = f64::INFINITY;
    let mut growth = 0;
    for _ in 0..MAX_ITER {
        let sq = truncated_square(c, lambda, omega * omega);
        if !(sq > 0.0) || !sq.is_finite() {
            return None;
        }
        let step = DAMPING * (sq.sqrt() - omega);
        omega += step;
        if step.abs() <= OMEGA_TOL * omega.max(1.0) {
            return Some(omega);
        }
        if step.abs() >= last_step {
            growth += 1;
            if growth >= 3 {
                return None;
            }
        } else {
            growth = 0;
        }
        last_step = step.abs();
    }
    None
}

/// Bisection on the largest sign change of `g` in
/// `[½·min(1, √(1+λ)), 2·max(1, √(1+λ))]`, located by scanning down from the top.
fn bisect(c: &[f64], lambda: f64) -> Result<f64> {
    const SCAN: usize = 400;
    let root = (1.0 + lambda).sqrt();
    let (lo, hi) = (0.5 * root.min(1.0), 2.0 * root.max(1.0));
    let g = |w: f64| w * w - truncated_square(c, lambda, w * w);
    let (g_lo, g_hi) = (g(lo), g(hi));

    let mut upper = (hi, g_hi);
    let mut bracket = None;
    for i in (0..SCAN).rev() {
        let w = lo + (hi - lo) * i as f64 / SCAN as f64;
        let gw = g(w);
        if gw * upper.1 <= 0.0 {
            bracket = Some((w, upper.0, gw < 0.0));
            break;
        }
        upper = (w, gw);
    }
    let Some((mut a, mut b, a_negative)) = bracket else {
        return Err(Error::NoRoot { lo, hi, g_lo, g_hi });
    };
    for _ in 0..200 {
        if b - a <= OMEGA_TOL * b.max(1.0) {
            break;
        }
        let mid = 0.5 * (a + b);
        if (g(mid) < 0.0) == a_negative {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trig::ratio;

    #[test]
    fn exact_scaled_coefficients() {
        let s = alp_series(3).unwrap();
        assert_eq!(s.coeffs, vec![ratio(3, 4), ratio(-3, 128), ratio(0, 1)]);
        assert!(s.is_secular_free());
    }

    #[test]
    fn coefficients_at_frequency() {
        assert_eq!(alp_coefficients(3, 1.0).unwrap(), vec![0.75, -3.0 / 128.0, 0.0]);
        assert_eq!(alp_coefficients(3, 2.0).unwrap(), vec![0.75, -3.0 / 512.0, 0.0]);
        assert_eq!(alp_coefficients(1, 3.7).unwrap(), vec![0.75]);
        assert!(alp_coefficients(3, 0.0).is_err());
        assert!(alp_coefficients(3, -1.0).is_err());
    }

    #[test]
    fn harmonic_limit() {
        let t = alp_frequency(0.0, 3).unwrap();
        assert_eq!(t.diagnostics.omega, Some(1.0));
        assert!((t.value - 2.0 * PI).abs() < 1e-15);
    }

    #[test]
    fn third_order_frequency_at_unit_coupling() {
        let t = alp_frequency(1.0, 3).unwrap();
        let omega = (190f64.sqrt() + 14.0).sqrt() / 4.0;
        assert!((t.diagnostics.omega.unwrap() - omega).abs() < 1e-12);
        assert!((omega - 1.317_764).abs() < 1e-6);
        assert!((t.value - 4.768_064).abs() < 1e-6);
    }

    #[test]
    fn bisection_agrees_with_iteration() {
        for lam in [-0.9, -0.5, 0.3, 4.0, 250.0, 1e6] {
            let c = &scaled_coeffs()[..3];
            let a = fixed_point(c, lam).unwrap();
            let b = bisect(c, lam).unwrap();
            assert!((a - b).abs() < 1e-10 * a, "lambda {lam}: {a} vs {b}");
        }
    }

    #[test]
    fn rejects_bad_coupling() {
        assert!(alp_frequency(-1.0, 3).is_err());
        assert!(alp_frequency(f64::INFINITY, 3).is_err());
    }
}
