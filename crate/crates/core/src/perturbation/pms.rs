use crate::error::{Error, Result};

const GRID: usize = 512;
const ROOT_TOL: f64 = 1e-10;

/// Five-point central difference with step `1e−3 · max(1, |α|)`.
///
/// Returns `None` when the difference is within rounding noise of the
/// evaluator's magnitude, i.e. the sign carries no information.
fn derivative(f: &impl Fn(f64) -> f64, a: f64) -> Option<f64> {
    let h = 1e-3 * a.abs().max(1.0);
    let (f1, f2, f3, f4) = (f(a + h), f(a - h), f(a + 2.0 * h), f(a - 2.0 * h));
    let d = (8.0 * (f1 - f2) - (f3 - f4)) / (12.0 * h);
    let noise = 64.0 * f64::EPSILON * f1.abs().max(f2.abs()).max(f3.abs()).max(f4.abs()) / h;
    (d.abs() > noise).then_some(d)
}

/// Principle of minimal sensitivity: the smallest positive `α` in `bracket`
/// at which the evaluator (a truncated partial sum `P^[N](α)`) is stationary.
///
/// Scans a uniform grid for a sign change of the numerical derivative and
/// refines it by bisection to `1e−10`.
pub fn pms_root(evaluator: impl Fn(f64) -> f64, bracket: (f64, f64)) -> Result<f64> {
    let (lo, hi) = bracket;
    if !(hi > lo) || !(hi > 0.0) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain(format!("invalid bracket [{lo}, {hi}]")));
    }
    // Only positive stationary points are wanted.
    let start = lo.max(0.0);
    let mut last: Option<(f64, f64)> = None;
    for i in 0..=GRID {
        let a = start + (hi - start) * i as f64 / GRID as f64;
        let Some(d) = derivative(&evaluator, a) else {
            continue;
        };
        if let Some((a_prev, d_prev)) = last {
            if d_prev * d < 0.0 {
                return Ok(refine(&evaluator, a_prev, a, d_prev < 0.0));
            }
        }
        last = Some((a, d));
    }
    Err(Error::NoStationaryPoint { lo, hi })
}

fn refine(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, lo_negative: bool) -> f64 {
    for _ in 0..200 {
        if hi - lo <= ROOT_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let Some(d) = derivative(f, mid) else {
            return mid;
        };
        if (d < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
