//! Exact arithmetic on trigonometric polynomials with secular `t^p` factors.

mod bipoly;
mod coeff;
mod driven;
mod series;
mod text;

pub use bipoly::BiPoly;
pub use coeff::{integer, ratio, to_f64, Coefficient, DisplayCoeff, Rational};
pub use driven::{solve_driven, Resonance};
pub use series::{Kind, TermKey, TrigSeries, TrigTerm};

pub(crate) use driven::first_harmonic;
