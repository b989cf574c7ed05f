//! The driven harmonic equation `y″ + y = f`, solved exactly.

use super::coeff::{ratio, Coefficient, DisplayCoeff};
use super::series::{Kind, TermKey, TrigSeries};
use crate::error::{Error, Result};

/// Whether a forcing at the natural frequency may be integrated.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Resonance {
    /// Resonant forcing is an error.
    Reject,
    /// Resonant forcing yields secular `t^(p+1)` terms.
    Allow,
}

/// Returns the unique `y` with `y″ + y = f`, `y(0) = 0`, `y′(0) = 0`.
///
/// Works by undetermined coefficients, one monomial at a time from the
/// highest `t` power down. A forcing `c·t^p·cos(ku)` with `k ≠ 1` is matched by
/// `c/(1−k²)·t^p·cos(ku)`; the resonant `c·t^p·cos(u)` by
/// `c/(2(p+1))·t^(p+1)·sin(u)` (and `c·t^p·sin(u)` by `−c/(2(p+1))·t^(p+1)·cos(u)`).
/// Each step leaves a residual of strictly lower `t` power in the same
/// harmonic, so the loop terminates.
pub fn solve_driven<C: Coefficient>(f: &TrigSeries<C>, resonance: Resonance) -> Result<TrigSeries<C>> {
    if resonance == Resonance::Reject {
        let (cos1, sin1) = f.resonant_part();
        if !cos1.is_zero() || !sin1.is_zero() {
            return Err(Error::ResonantForcing {
                cos: DisplayCoeff(&cos1).to_string(),
                sin: DisplayCoeff(&sin1).to_string(),
            });
        }
    }

    let mut y = TrigSeries::zero();
    let mut residual = f.clone();
    while let Some((key, c)) = residual.last_term() {
        let (ykey, ycoeff) = if key.harmonic == 1 {
            if resonance == Resonance::Reject {
                // t^p cos(u) with p > 0 would also grow without bound.
                return Err(Error::ResonantForcing {
                    cos: DisplayCoeff(&residual.coeff(TermKey::cos(key.tpower, 1))).to_string(),
                    sin: DisplayCoeff(&residual.coeff(TermKey::sin(key.tpower, 1))).to_string(),
                });
            }
            let denom = 2 * (key.tpower as i64 + 1);
            match key.kind {
                Kind::Cos => (TermKey::sin(key.tpower + 1, 1), c.scale(&ratio(1, denom))),
                Kind::Sin => (TermKey::cos(key.tpower + 1, 1), c.scale(&ratio(-1, denom))),
            }
        } else {
            let k = key.harmonic as i64;
            (key, c.scale(&ratio(1, 1 - k * k)))
        };
        let piece = TrigSeries::term(ykey, ycoeff);
        residual = &residual - &piece.harmonic_operator();
        y = y + piece;
    }

    // Homogeneous correction A cos(u) + B sin(u) for zero initial data.
    let y0 = y.value_at_zero();
    let v0 = y.derivative().value_at_zero();
    y.accumulate(TermKey::cos(0, 1), -y0);
    y.accumulate(TermKey::sin(0, 1), -v0);
    Ok(y)
}

/// `a·cos(u)` where `a` is a ring element; shorthand used by the engines.
pub(crate) fn first_harmonic<C: Coefficient>(a: C) -> TrigSeries<C> {
    TrigSeries::term(TermKey::cos(0, 1), a)
}
