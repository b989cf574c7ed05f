//! Third-order closed forms, kept as an oracle independent of the engines.

use std::f64::consts::{PI, SQRT_2};

use crate::error::{Error, Result};
use crate::period::{Diagnostics, MethodKind, PeriodEstimate, PeriodSource};

fn positive_radicand(value: f64, what: &str, lambda: f64) -> Result<f64> {
    if value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain(format!("{what} radicand {value} is not positive at lambda = {lambda}")))
    }
}

/// Third-order period of the given method in closed form:
///
/// * LP: `32√2π / √(9λ³ − 12λ² + 384λ + 512)`
/// * ALP: `2π/ω`, `ω = √(√(30λ² + 96λ + 64) + 2(3λ + 4)) / 4`
/// * VLP: `8√2π(3λ + 4) / √(207λ³ + 852λ² + 1152λ + 512)`, at `α = √(3λ)/2`
pub fn closed_form_period(method: MethodKind, lambda: f64) -> Result<PeriodEstimate> {
    if !lambda.is_finite() || lambda <= -1.0 {
        return Err(Error::Domain(format!("coupling must satisfy lambda > -1, got {lambda}")));
    }
    let l = lambda;
    let (value, diagnostics) = match method {
        MethodKind::Lp => {
            let r = positive_radicand(((9.0 * l - 12.0) * l + 384.0) * l + 512.0, "LP", l)?;
            (32.0 * SQRT_2 * PI / r.sqrt(), Diagnostics::default())
        }
        MethodKind::Alp => {
            let r = positive_radicand((30.0 * l + 96.0) * l + 64.0, "ALP", l)?;
            let omega = (r.sqrt() + 2.0 * (3.0 * l + 4.0)).sqrt() / 4.0;
            (2.0 * PI / omega, Diagnostics { omega: Some(omega), ..Default::default() })
        }
        MethodKind::Vlp => {
            if l < 0.0 {
                return Err(Error::Domain(format!(
                    "stationary alpha = sqrt(3 lambda)/2 is not real at lambda = {l}"
                )));
            }
            let r = positive_radicand(((207.0 * l + 852.0) * l + 1152.0) * l + 512.0, "VLP", l)?;
            let alpha = (3.0 * l).sqrt() / 2.0;
            (
                8.0 * SQRT_2 * PI * (3.0 * l + 4.0) / r.sqrt(),
                Diagnostics { alpha: Some(alpha), ..Default::default() },
            )
        }
        MethodKind::Naive => return Err(Error::NoPeriod(MethodKind::Naive)),
    };
    Ok(PeriodEstimate::new(value, PeriodSource::Method(method), 3, lambda).with_diagnostics(diagnostics))
}
