//! Variational Lindstedt–Poincaré.
//!
//! The model is rewritten as `ẍ + (1+α²)x = δ(−λx³ + α²x)`, rescaled by
//! `s = √γ t`, and expanded in the bookkeeping parameter δ, which is set to one
//! by summing the orders. Dividing through by `γ_0 = 1 + α²`, the order-`n`
//! equation depends only on `p = λ/γ_0` and `q = α²/γ_0`:
//!
//! `x_n″ + x_n = −p [x³]_{n−1} − Σ_{j=1}^{n} P_j x_{n−j}″ + q x_{n−1}`,
//! with `γ_n = γ_0 · P_n(p, q)`.
//!
//! The recursion therefore runs once over bivariate polynomials in `(p, q)`
//! and is evaluated for any `(α, λ)` afterwards.

use std::f64::consts::PI;
use std::sync::OnceLock;

use super::{check_order, eliminate_secular, pms_root, Memory, SeriesSolution, MAX_ORDER};
use crate::error::{Error, Result};
use crate::period::{Diagnostics, MethodKind, PeriodEstimate, PeriodSource};
use crate::trig::BiPoly;

fn expand(order: usize) -> Result<(Vec<crate::trig::TrigSeries<BiPoly>>, Vec<BiPoly>)> {
    eliminate_secular(order, &BiPoly::p(), &BiPoly::q(), Memory::Acceleration)
}

/// `P_0 ..= P_8`, computed once.
fn polynomials() -> &'static [BiPoly] {
    static POLYS: OnceLock<Vec<BiPoly>> = OnceLock::new();
    POLYS.get_or_init(|| expand(MAX_ORDER).expect("secular elimination is exact for the VLP hierarchy").1)
}

fn gammas_from(polys: &[BiPoly], alpha: f64, lambda: f64) -> Vec<f64> {
    let a2 = alpha * alpha;
    let g0 = 1.0 + a2;
    let (p, q) = (lambda / g0, a2 / g0);
    polys.iter().map(|poly| g0 * poly.eval(p, q)).collect()
}

/// VLP hierarchy to order `N`; `values` holds `γ_0..γ_N` at the given `(α, λ)`.
pub fn vlp_series(order: usize, alpha: f64, lambda: f64) -> Result<SeriesSolution<BiPoly>> {
    check_order(order, 1)?;
    let (solutions, coeffs) = expand(order)?;
    let values = gammas_from(&coeffs, alpha, lambda);
    Ok(SeriesSolution {
        method: MethodKind::Vlp,
        order,
        solutions,
        coeffs,
        values,
        alpha: Some(alpha),
        omega: None,
    })
}

/// `γ_0 ..= γ_N` at `(α, λ)`.
pub fn vlp_gammas(order: usize, alpha: f64, lambda: f64) -> Result<Vec<f64>> {
    check_order(order, 1)?;
    Ok(gammas_from(&polynomials()[..=order], alpha, lambda))
}

/// Partial sum `Σ_{j=0}^{N} γ_j(α, λ)`, the quantity made stationary in α.
pub fn vlp_gamma_sum(order: usize, alpha: f64, lambda: f64) -> f64 {
    let a2 = alpha * alpha;
    let g0 = 1.0 + a2;
    let (p, q) = (lambda / g0, a2 / g0);
    g0 * polynomials()[..=order].iter().map(|poly| poly.eval(p, q)).sum::<f64>()
}

/// Upper end of the α search; the third-order stationary point sits at `√(3λ)/2`.
fn alpha_bracket(lambda: f64) -> (f64, f64) {
    (0.0, 4.0 * (1.0 + lambda).sqrt())
}

/// Minimal-sensitivity α for the order-`N` partial sum at coupling `λ > 0`.
pub fn vlp_alpha(lambda: f64, order: usize) -> Result<f64> {
    check_order(order, 1)?;
    pms_root(|a| vlp_gamma_sum(order, a, lambda), alpha_bracket(lambda))
}

/// `T = 2π / √(Σ γ_j(α*, λ))` with α* from the minimal-sensitivity condition.
///
/// Only `λ ≥ 0`: for `λ < 0` the stationary point is not real.
pub fn vlp_period(lambda: f64, order: usize) -> Result<PeriodEstimate> {
    check_order(order, 1)?;
    if !lambda.is_finite() || lambda < 0.0 {
        return Err(Error::Domain(format!("variational LP requires lambda >= 0, got {lambda}")));
    }
    let alpha = if lambda == 0.0 { 0.0 } else { vlp_alpha(lambda, order)? };
    let sum = vlp_gamma_sum(order, alpha, lambda);
    if !(sum > 0.0) {
        return Err(Error::NegativeGamma { lambda, sum });
    }
    Ok(PeriodEstimate::new(2.0 * PI / sum.sqrt(), PeriodSource::Method(MethodKind::Vlp), order, lambda)
        .with_diagnostics(Diagnostics { alpha: Some(alpha), gamma_sum: Some(sum), ..Default::default() }))
}
