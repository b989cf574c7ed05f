use std::f64::consts::PI;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::{check_order, eliminate_secular, Memory, SeriesSolution, MAX_ORDER};
use crate::error::{Error, Result};
use crate::period::{Diagnostics, MethodKind, PeriodEstimate, PeriodSource};
use crate::trig::{to_f64, Rational};

/// Lindstedt–Poincaré expansion in `s = √γ t` with `γ = Σ γ_j λ^j`.
///
/// `γ_n` is chosen so the order-`n` forcing has no `cos(s)` component; all
/// `γ_n` are exact rationals.
pub fn lp_series(order: usize) -> Result<SeriesSolution> {
    check_order(order, 1)?;
    let (solutions, coeffs) =
        eliminate_secular(order, &Rational::one(), &Rational::zero(), Memory::Acceleration)?;
    let values = coeffs.iter().map(to_f64).collect();
    Ok(SeriesSolution { method: MethodKind::Lp, order, solutions, coeffs, values, alpha: None, omega: None })
}

/// `γ_0 ..= γ_8`, computed once.
pub(crate) fn lp_gammas() -> &'static [Rational] {
    static GAMMAS: OnceLock<Vec<Rational>> = OnceLock::new();
    GAMMAS.get_or_init(|| {
        lp_series(MAX_ORDER).expect("secular elimination is exact for the LP hierarchy").coeffs
    })
}

/// `T = 2π / √(Σ_{j=0}^{N} γ_j λ^j)`.
pub fn lp_period(lambda: f64, order: usize) -> Result<PeriodEstimate> {
    check_order(order, 1)?;
    if !lambda.is_finite() || lambda <= -1.0 {
        return Err(Error::Domain(format!("coupling must satisfy lambda > -1, got {lambda}")));
    }
    let sum = lp_gammas()[..=order].iter().rev().fold(0.0, |acc, g| acc * lambda + to_f64(g));
    if !(sum > 0.0) {
        return Err(Error::NegativeGamma { lambda, sum });
    }
    Ok(PeriodEstimate::new(2.0 * PI / sum.sqrt(), PeriodSource::Method(MethodKind::Lp), order, lambda)
        .with_diagnostics(Diagnostics { gamma_sum: Some(sum), ..Default::default() }))
}
