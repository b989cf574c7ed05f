//! The dimensionless quartic oscillator `ẍ + x = −λx³`, `x(0) = 1`, `ẋ(0) = 0`,
//! and its two independent period oracles.

mod elliptic;
mod ode;

use std::f64::consts::PI;
use std::io::{self, Write};
use std::ops::ControlFlow;

pub use elliptic::{agm, elliptic_k};

use crate::error::{Error, Result};
use crate::period::{PeriodEstimate, PeriodSource};

/// Largest coupling for which the exact period's accuracy is claimed.
pub const LAMBDA_MAX: f64 = 1e8;

/// Dimensionless coupling `λ`; motion from `x = 1` at rest is periodic iff `λ > −1`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct DuffingParams {
    lambda: f64,
}

impl DuffingParams {
    pub fn new(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() || lambda <= -1.0 {
            return Err(Error::Domain(format!("coupling must satisfy lambda > -1, got {lambda}")));
        }
        Ok(Self { lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Energy of the canonical initial condition, `1/2 + λ/4`.
    pub fn initial_energy(&self) -> f64 {
        0.5 + 0.25 * self.lambda
    }

    fn rhs(&self, y: &ode::State) -> ode::State {
        let x = y[0];
        [y[1], -x - self.lambda * x * x * x]
    }
}

/// `ẋ²/2 + x²/2 + λx⁴/4`
pub fn energy(x: f64, xdot: f64, p: &DuffingParams) -> f64 {
    let x2 = x * x;
    0.5 * xdot * xdot + 0.5 * x2 + 0.25 * p.lambda * x2 * x2
}

/// Exact period `T = 4K(m)/√(1+λ)` with `m = λ / (2(1+λ))`.
pub fn exact_period(p: &DuffingParams) -> PeriodEstimate {
    let lam = p.lambda;
    let m = lam / (2.0 * (1.0 + lam));
    let value = 4.0 * elliptic_k(m) / (1.0 + lam).sqrt();
    PeriodEstimate::new(value, PeriodSource::Exact, 0, lam)
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub x: f64,
    pub xdot: f64,
}

/// Accepted-step samples of a reference integration, starting at `(0, 1, 0)`.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub params: DuffingParams,
    pub tolerance: f64,
    pub samples: Vec<Sample>,
}

impl Trajectory {
    /// Largest deviation of the sampled energy from `1/2 + λ/4`.
    pub fn max_energy_drift(&self) -> f64 {
        let e0 = self.params.initial_energy();
        self.samples.iter().map(|s| (energy(s.x, s.xdot, &self.params) - e0).abs()).fold(0.0, f64::max)
    }

    /// CSV with header `t,x,xdot,energy`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "t,x,xdot,energy")?;
        for s in &self.samples {
            writeln!(out, "{},{},{},{}", s.t, s.x, s.xdot, energy(s.x, s.xdot, &self.params))?;
        }
        Ok(())
    }
}

fn check_tolerance(tol: f64) -> Result<()> {
    if !(1e-14..=1e-3).contains(&tol) {
        return Err(Error::Domain(format!("tolerance must lie in [1e-14, 1e-3], got {tol}")));
    }
    Ok(())
}

/// Integrates the model from `(1, 0)` to `t_end` with an adaptive
/// Dormand–Prince 5(4) pair.
pub fn integrate_trajectory(p: &DuffingParams, t_end: f64, tol: f64) -> Result<Trajectory> {
    check_tolerance(tol)?;
    if !(t_end > 0.0) || !t_end.is_finite() {
        return Err(Error::Domain(format!("t_end must be positive, got {t_end}")));
    }
    let mut samples = vec![Sample { t: 0.0, x: 1.0, xdot: 0.0 }];
    ode::integrate(
        |y| p.rhs(y),
        [1.0, 0.0],
        t_end,
        tol,
        |step| {
            samples.push(Sample { t: step.t1, x: step.y1[0], xdot: step.y1[1] });
            ControlFlow::Continue(())
        },
    )?;
    Ok(Trajectory { params: *p, tolerance: tol, samples })
}

/// Period from the first downward zero crossing of `x`: `T = 4 t*`.
///
/// The crossing is bracketed on an accepted step and located by bisection on
/// the step's dense output until the bracket is narrower than `tol`.
pub fn numeric_period(p: &DuffingParams, tol: f64) -> Result<PeriodEstimate> {
    check_tolerance(tol)?;
    // Quarter periods grow like ln(1/(1+λ)) near λ = −1; this horizon is ample.
    let horizon = 1e6;
    let mut crossing = None;
    ode::integrate(
        |y| p.rhs(y),
        [1.0, 0.0],
        horizon,
        tol,
        |step| {
            if step.y0[0] > 0.0 && step.y1[0] <= 0.0 {
                crossing = Some(locate_zero(step, tol));
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        },
    )?;
    let quarter = crossing.ok_or_else(|| Error::Domain(format!("no zero crossing before t = {horizon}")))?;
    Ok(PeriodEstimate::new(4.0 * quarter, PeriodSource::Numeric, 0, p.lambda))
}

fn locate_zero(step: &ode::Step, tol: f64) -> f64 {
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..200 {
        if (hi - lo) * step.h <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if step.interpolate(mid)[0] > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    step.t0 + 0.5 * (lo + hi) * step.h
}

/// `2π`, the period of every method at `λ = 0`.
pub const HARMONIC_PERIOD: f64 = 2.0 * PI;
