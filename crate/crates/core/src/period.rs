use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// The four expansion schemes.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MethodKind {
    /// Straight power series in λ; secular, no period.
    Naive,
    /// Lindstedt–Poincaré: time rescaled by the expanded frequency.
    Lp,
    /// Alternative Lindstedt–Poincaré: ω² expanded, solved self-consistently.
    Alp,
    /// Variational Lindstedt–Poincaré with a minimal-sensitivity parameter.
    Vlp,
}

impl MethodKind {
    pub const PERIODIC: [MethodKind; 3] = [MethodKind::Lp, MethodKind::Alp, MethodKind::Vlp];

    pub fn name(self) -> &'static str {
        match self {
            MethodKind::Naive => "naive",
            MethodKind::Lp => "lp",
            MethodKind::Alp => "alp",
            MethodKind::Vlp => "vlp",
        }
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "naive" => Ok(MethodKind::Naive),
            "lp" => Ok(MethodKind::Lp),
            "alp" => Ok(MethodKind::Alp),
            "vlp" => Ok(MethodKind::Vlp),
            other => Err(Error::Domain(format!("unknown method {other:?}"))),
        }
    }
}

/// Where a period value comes from.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PeriodSource {
    /// Complete elliptic integral.
    Exact,
    /// Reference ODE integration with zero-crossing detection.
    Numeric,
    Method(MethodKind),
}

impl fmt::Display for PeriodSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeriodSource::Exact => f.write_str("exact"),
            PeriodSource::Numeric => f.write_str("numeric"),
            PeriodSource::Method(m) => m.fmt(f),
        }
    }
}

impl FromStr for PeriodSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exact" => Ok(PeriodSource::Exact),
            "numeric" => Ok(PeriodSource::Numeric),
            other => other.parse().map(PeriodSource::Method),
        }
    }
}

/// Side information attached to a period value.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Diagnostics {
    /// Minimal-sensitivity parameter (VLP).
    pub alpha: Option<f64>,
    /// Self-consistent frequency (ALP).
    pub omega: Option<f64>,
    /// Partial sum of the squared-frequency series (LP, VLP).
    pub gamma_sum: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PeriodEstimate {
    pub value: f64,
    pub source: PeriodSource,
    /// Perturbation order; zero for the exact and numeric sources.
    pub order: usize,
    pub lambda: f64,
    pub diagnostics: Diagnostics,
}

impl PeriodEstimate {
    pub(crate) fn new(value: f64, source: PeriodSource, order: usize, lambda: f64) -> Self {
        Self { value, source, order, lambda, diagnostics: Diagnostics::default() }
    }

    pub(crate) fn with_diagnostics(mut self, diagnostics: Diagnostics) -> Self {
        self.diagnostics = diagnostics;
        self
    }

    /// `√λ · T`, the quantity with a finite strong-coupling limit.
    pub fn scaled(&self) -> f64 {
        self.lambda.sqrt() * self.value
    }
}
