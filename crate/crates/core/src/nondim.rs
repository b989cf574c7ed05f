//! Reduction of `m q̈ = −v₂ q − v₄ q³` to the dimensionless model.
//!
//! With `ω₀ = √(v₂/m)`, `s = ω₀ t + φ` and `x(s) = q(t)/A`, where `A` is the
//! turning-point amplitude, the equation becomes `x″ + x = −λx³` with
//! `λ = v₄A²/v₂`, `x(0) = 1`, `x′(0) = 0`. Periods map back as `T′ = T/ω₀`.

use crate::error::{Error, Result};
use crate::oscillator::DuffingParams;
use crate::period::PeriodSource;
use crate::perturbation::period;

/// A particle of mass `m` in `V(q) = v₂q²/2 + v₄q⁴/4`, released at rest from `q = A`
/// at time `turning_time`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct PhysicalOscillator {
    pub mass: f64,
    pub v2: f64,
    pub v4: f64,
    pub amplitude: f64,
    /// Time `t₁` at which `q̇ = 0`, `q = A`; zero when the motion starts there.
    pub turning_time: f64,
}

impl PhysicalOscillator {
    pub fn new(mass: f64, v2: f64, v4: f64, amplitude: f64) -> Self {
        Self { mass, v2, v4, amplitude, turning_time: 0.0 }
    }

    /// Builds the oscillator from an arbitrary initial state `(q₀, v₀)`.
    ///
    /// The turning-point amplitude solves `v₂A²/2 + v₄A⁴/4 = E`; for a
    /// softening spring (`v₄ < 0`) the smaller root is the one the particle
    /// reaches. `turning_time` is left at zero (the phase does not enter periods).
    pub fn from_state(mass: f64, v2: f64, v4: f64, q0: f64, v0: f64) -> Result<Self> {
        if !(mass > 0.0) || !(v2 > 0.0) {
            return Err(Error::Domain(format!("mass and v2 must be positive, got {mass}, {v2}")));
        }
        let q2 = q0 * q0;
        let energy = 0.5 * mass * v0 * v0 + 0.5 * v2 * q2 + 0.25 * v4 * q2 * q2;
        let (a, b) = (0.25 * v4, 0.5 * v2);
        let disc = b * b + 4.0 * a * energy;
        if disc < 0.0 || !(energy > 0.0) {
            return Err(Error::Domain(format!(
                "no turning point: energy {energy} exceeds the barrier or vanishes"
            )));
        }
        // Root of a X² + b X − E = 0 continuous in a through a = 0.
        let amp_sq = 2.0 * energy / (b + disc.sqrt());
        Ok(Self::new(mass, v2, v4, amp_sq.sqrt()))
    }
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct NondimResult {
    pub lambda: f64,
    /// Harmonic angular frequency `√(v₂/m)`.
    pub omega0: f64,
    /// Phase `−ω₀ t₁`.
    pub phi: f64,
}

impl NondimResult {
    pub fn params(&self) -> Result<DuffingParams> {
        DuffingParams::new(self.lambda)
    }
}

pub fn to_dimensionless(p: &PhysicalOscillator) -> Result<NondimResult> {
    if !(p.mass > 0.0) || !(p.v2 > 0.0) || !(p.amplitude > 0.0) {
        return Err(Error::Domain(format!(
            "mass, v2 and amplitude must be positive, got {}, {}, {}",
            p.mass, p.v2, p.amplitude
        )));
    }
    if !p.v4.is_finite() || !p.turning_time.is_finite() {
        return Err(Error::Domain("v4 and turning time must be finite".into()));
    }
    let lambda = p.v4 * p.amplitude * p.amplitude / p.v2;
    if lambda <= -1.0 {
        return Err(Error::Domain(format!(
            "lambda = {lambda} <= -1: motion at this amplitude is not periodic"
        )));
    }
    let omega0 = (p.v2 / p.mass).sqrt();
    Ok(NondimResult { lambda, omega0, phi: -omega0 * p.turning_time })
}

/// Inverse map: the dimensional oscillator with the given mass and amplitude
/// whose reduction is `nd`.
pub fn to_physical(nd: &NondimResult, mass: f64, amplitude: f64) -> PhysicalOscillator {
    let v2 = mass * nd.omega0 * nd.omega0;
    let v4 = nd.lambda * v2 / (amplitude * amplitude);
    let turning_time = if nd.omega0 > 0.0 { -nd.phi / nd.omega0 } else { 0.0 };
    PhysicalOscillator { mass, v2, v4, amplitude, turning_time }
}

/// Period in the caller's time units, `T(λ)/ω₀`.
pub fn physical_period(p: &PhysicalOscillator, source: PeriodSource, order: usize) -> Result<f64> {
    let nd = to_dimensionless(p)?;
    Ok(period(source, nd.lambda, order)?.value / nd.omega0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscillator::exact_period;
    use std::f64::consts::PI;

    #[test]
    fn harmonic_case() {
        let nd = to_dimensionless(&PhysicalOscillator::new(1.0, 1.0, 0.0, 1.0)).unwrap();
        assert_eq!((nd.lambda, nd.omega0, nd.phi), (0.0, 1.0, 0.0));
    }

    #[test]
    fn hardening_case() {
        let nd = to_dimensionless(&PhysicalOscillator::new(2.0, 8.0, 1.0, 2.0)).unwrap();
        assert_eq!((nd.lambda, nd.omega0), (0.5, 2.0));
    }

    #[test]
    fn softening_case_is_admissible() {
        let nd = to_dimensionless(&PhysicalOscillator::new(1.0, 1.0, -0.5, 1.0)).unwrap();
        assert_eq!(nd.lambda, -0.5);
        assert!(to_dimensionless(&PhysicalOscillator::new(1.0, 1.0, -1.0, 1.0)).is_err());
    }

    #[test]
    fn rejects_nonpositive_parameters() {
        assert!(to_dimensionless(&PhysicalOscillator::new(0.0, 1.0, 0.0, 1.0)).is_err());
        assert!(to_dimensionless(&PhysicalOscillator::new(1.0, -1.0, 0.0, 1.0)).is_err());
        assert!(to_dimensionless(&PhysicalOscillator::new(1.0, 1.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn phase_from_turning_time() {
        let mut p = PhysicalOscillator::new(1.0, 4.0, 0.0, 1.0);
        p.turning_time = 0.25;
        assert_eq!(to_dimensionless(&p).unwrap().phi, -0.5);
    }

    #[test]
    fn periods() {
        let t =
            physical_period(&PhysicalOscillator::new(1.0, 1.0, 0.0, 1.0), PeriodSource::Exact, 3).unwrap();
        assert!((t - 2.0 * PI).abs() < 1e-15);
        let t =
            physical_period(&PhysicalOscillator::new(1.0, 4.0, 0.0, 3.0), PeriodSource::Exact, 3).unwrap();
        assert!((t - PI).abs() < 1e-15);
        let t =
            physical_period(&PhysicalOscillator::new(2.0, 8.0, 1.0, 2.0), PeriodSource::Exact, 3).unwrap();
        let expect = exact_period(&DuffingParams::new(0.5).unwrap()).value / 2.0;
        assert!((t - expect).abs() < 1e-12);
    }

    #[test]
    fn amplitude_from_state() {
        // Released at rest: the amplitude is the starting point.
        let p = PhysicalOscillator::from_state(2.0, 8.0, 1.0, 2.0, 0.0).unwrap();
        assert!((p.amplitude - 2.0).abs() < 1e-14);
        // Harmonic: A² = q0² + m v0²/v2.
        let p = PhysicalOscillator::from_state(1.0, 4.0, 0.0, 1.0, 2.0).unwrap();
        assert!((p.amplitude - 2f64.sqrt()).abs() < 1e-14);
        // Softening spring: reachable turning point is the inner root.
        let p = PhysicalOscillator::from_state(1.0, 1.0, -0.5, 0.0, 0.5).unwrap();
        let a2 = p.amplitude * p.amplitude;
        assert!((0.5 * a2 - 0.125 * a2 * a2 - 0.125).abs() < 1e-15);
        assert!(a2 < 2.0);
        // Above the barrier.
        assert!(PhysicalOscillator::from_state(1.0, 1.0, -0.5, 0.0, 2.0).is_err());
    }

    #[test]
    fn round_trip() {
        let p = PhysicalOscillator::new(3.0, 7.0, -1.5, 1.2);
        let back = to_physical(&to_dimensionless(&p).unwrap(), p.mass, p.amplitude);
        assert!((back.v2 - p.v2).abs() <= 1e-14 * p.v2);
        assert!((back.v4 - p.v4).abs() <= 1e-14 * p.v4.abs());
    }
}
