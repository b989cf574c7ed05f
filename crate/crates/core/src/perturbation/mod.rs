//! Perturbation expansions of `ẍ + x = −λx³` about the harmonic solution.
//!
//! Every engine solves the same hierarchy `x_n″ + x_n = F_n` with
//! `x_0 = cos(·)` and `x_n(0) = x_n′(0) = 0`. The non-secular engines pick
//! one free coefficient per order so that `F_n` has no `cos(·)` component.

mod alp;
mod closed_form;
mod lp;
mod naive;
mod pms;
mod vlp;

pub use alp::{alp_coefficients, alp_frequency, alp_series};
pub use closed_form::closed_form_period;
pub use lp::{lp_period, lp_series};
pub use naive::naive_series;
pub use pms::pms_root;
pub use vlp::{vlp_alpha, vlp_gamma_sum, vlp_gammas, vlp_period, vlp_series};

use crate::error::{Error, Result};
use crate::oscillator::{exact_period, numeric_period, DuffingParams};
use crate::period::{MethodKind, PeriodEstimate, PeriodSource};
use crate::trig::{first_harmonic, solve_driven, Coefficient, Rational, Resonance, TrigSeries};

/// Highest perturbation order any engine accepts.
pub const MAX_ORDER: usize = 8;

/// Per-order solutions and the coefficient sequence fixed by secular elimination.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesSolution<C = Rational> {
    pub method: MethodKind,
    pub order: usize,
    /// `x_0 ..= x_N`. For ALP these are the ω-free `y_n` with `x_n = ω^{−2n} y_n`.
    pub solutions: Vec<TrigSeries<C>>,
    /// Exact coefficients: `γ_0..γ_N` (LP), `w_n ω^{2(n−1)}` for `n = 1..N` (ALP),
    /// `γ_n / γ_0` as polynomials in `p = λ/γ_0`, `q = α²/γ_0` (VLP), empty for the naive series.
    pub coeffs: Vec<C>,
    /// Numeric coefficients: `γ_j` (LP, VLP at the given α, λ) or `w_j` at ω = 1 (ALP).
    pub values: Vec<f64>,
    pub alpha: Option<f64>,
    pub omega: Option<f64>,
}

impl<C: Coefficient> SeriesSolution<C> {
    pub fn is_secular_free(&self) -> bool {
        self.solutions.iter().all(TrigSeries::is_secular_free)
    }

    /// Text form: a coefficient table followed by each `x_n` in series text format.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;

        let mut out = String::new();
        let _ = writeln!(out, "# method {} order {}", self.method, self.order);
        if let Some(a) = self.alpha {
            let _ = writeln!(out, "# alpha {a}");
        }
        if let Some(w) = self.omega {
            let _ = writeln!(out, "# omega {w}");
        }
        let first = if self.method == MethodKind::Alp { 1 } else { 0 };
        for (i, c) in self.coeffs.iter().enumerate() {
            let _ = writeln!(out, "coeff[{}] = {}", i + first, crate::trig::DisplayCoeff(c));
        }
        for (n, x) in self.solutions.iter().enumerate() {
            let _ = writeln!(out, "x[{n}] =");
            let _ = write!(out, "{x}");
        }
        out
    }
}

pub(crate) fn check_order(order: usize, min: usize) -> Result<()> {
    if order < min || order > MAX_ORDER {
        return Err(Error::Domain(format!("order must lie in [{min}, {MAX_ORDER}], got {order}")));
    }
    Ok(())
}

/// How the already-determined coefficients enter the order-`n` forcing.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub(crate) enum Memory {
    /// `−Σ_{j≥1} g_j x_{n−j}″` (time rescaling, LP and VLP).
    Acceleration,
    /// `+Σ_{j≥1} g_j x_{n−j}` (squared-frequency shift, ALP).
    Displacement,
}

/// Running sums `Σ_k x_k x_{m−k}`, so the cubic convolution at each order
/// costs one pass over the previous orders.
struct CubicConvolution<C> {
    squares: Vec<TrigSeries<C>>,
}

impl<C: Coefficient> CubicConvolution<C> {
    fn new() -> Self {
        Self { squares: Vec::new() }
    }

    /// Records `Σ_{k=0}^{m} x_k x_{m−k}` for the newest order `m = xs.len() − 1`.
    fn extend(&mut self, xs: &[TrigSeries<C>]) {
        let m = xs.len() - 1;
        let mut sq = TrigSeries::zero();
        for k in 0..=m {
            sq = sq + &xs[k] * &xs[m - k];
        }
        self.squares.push(sq);
    }

    /// Coefficient of order `n − 1` in `x³`: `Σ_j Σ_k x_k x_{j−k} x_{n−1−j}`.
    fn cubic(&self, xs: &[TrigSeries<C>], n: usize) -> TrigSeries<C> {
        let mut out = TrigSeries::zero();
        for j in 0..n {
            out = out + &self.squares[j] * &xs[n - 1 - j];
        }
        out
    }
}

/// Runs the secular-free hierarchy
/// `x_n″ + x_n = −w·[x³]_{n−1} ∓ Σ_{j=1}^{n} g_j (x_{n−j}″ | x_{n−j}) + s·x_{n−1}`
/// choosing `g_n` at every order so that the resonant term cancels.
/// Returns the solutions and `g_0 = 1, g_1, ..., g_N`.
pub(crate) fn eliminate_secular<C: Coefficient>(
    order: usize,
    cubic_weight: &C,
    shift: &C,
    memory: Memory,
) -> Result<(Vec<TrigSeries<C>>, Vec<C>)> {
    let mut xs = vec![TrigSeries::cos(1)];
    let mut basis = vec![basis_of(&xs[0], memory)];
    let mut coeffs = vec![C::one()];
    let mut conv = CubicConvolution::new();
    conv.extend(&xs);

    for n in 1..=order {
        let mut rest = -conv.cubic(&xs, n).scale(cubic_weight);
        for j in 1..n {
            rest = &rest - &basis[n - j].scale(&coeffs[j]);
        }
        if !shift.is_zero() {
            rest = &rest + &xs[n - 1].scale(shift);
        }
        // −g_n·basis_0 = g_n·cos(·) for both memory kinds.
        let (cos1, _) = rest.resonant_part();
        let g_n = -cos1;
        let forcing = &rest + &first_harmonic(g_n.clone());
        let x_n = solve_driven(&forcing, Resonance::Reject)?;

        basis.push(basis_of(&x_n, memory));
        xs.push(x_n);
        coeffs.push(g_n);
        conv.extend(&xs);
    }
    Ok((xs, coeffs))
}

fn basis_of<C: Coefficient>(x: &TrigSeries<C>, memory: Memory) -> TrigSeries<C> {
    match memory {
        Memory::Acceleration => x.derivative().derivative(),
        Memory::Displacement => -x,
    }
}

/// Period of the model at coupling `lambda` from the given source.
///
/// Perturbative sources use `order`; the numeric source integrates at
/// tolerance `1e−10`.
pub fn period(source: PeriodSource, lambda: f64, order: usize) -> Result<PeriodEstimate> {
    match source {
        PeriodSource::Exact => Ok(exact_period(&DuffingParams::new(lambda)?)),
        PeriodSource::Numeric => numeric_period(&DuffingParams::new(lambda)?, 1e-10),
        PeriodSource::Method(MethodKind::Lp) => lp_period(lambda, order),
        PeriodSource::Method(MethodKind::Alp) => alp_frequency(lambda, order),
        PeriodSource::Method(MethodKind::Vlp) => vlp_period(lambda, order),
        PeriodSource::Method(MethodKind::Naive) => Err(Error::NoPeriod(MethodKind::Naive)),
    }
}
