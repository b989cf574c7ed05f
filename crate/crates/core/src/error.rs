use thiserror::Error;

use crate::period::MethodKind;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("resonant forcing: cos(u) coefficient {cos}, sin(u) coefficient {sin}")]
    ResonantForcing { cos: String, sin: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("step size underflow at t = {t} (h = {h:e})")]
    ToleranceNotMet { t: f64, h: f64 },

    #[error("frequency-squared partial sum {sum} is not positive at lambda = {lambda}")]
    NegativeGamma { lambda: f64, sum: f64 },

    #[error("no root in [{lo}, {hi}]: g(lo) = {g_lo}, g(hi) = {g_hi}")]
    NoRoot { lo: f64, hi: f64, g_lo: f64, g_hi: f64 },

    #[error("no stationary point in [{lo}, {hi}]")]
    NoStationaryPoint { lo: f64, hi: f64 },

    #[error("method {0} does not define a period")]
    NoPeriod(MethodKind),

    #[error("cannot parse series term: {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
