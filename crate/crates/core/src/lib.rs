//! Secular-term-free perturbation theory for the quartic oscillator
//! `ẍ + x = −λx³`, `x(0) = 1`, `ẋ(0) = 0`.
//!
//! * [`trig`]: exact trigonometric-polynomial algebra and the driven
//!   harmonic solver every perturbation order relies on.
//! * [`oscillator`]: the model, its energy integral, the elliptic-integral
//!   period and a reference ODE integrator.
//! * [`perturbation`]: naive, Lindstedt–Poincaré, alternative LP and
//!   variational LP expansions.
//! * [`nondim`]: reduction of a dimensional quartic oscillator to `λ`.
//! * [`sweep`]: coupling sweeps, strong-coupling limits, CSV and SVG output.

// `!(x > 0.0)` is used deliberately so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod nondim;
pub mod oscillator;
pub mod period;
pub mod perturbation;
pub mod sweep;
pub mod trig;

pub use error::{Error, Result};
pub use period::{Diagnostics, MethodKind, PeriodEstimate, PeriodSource};
