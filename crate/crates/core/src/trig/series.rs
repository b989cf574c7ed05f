use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::coeff::{integer, ratio, to_f64, Coefficient, DisplayCoeff, Rational};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Cos,
    Sin,
}

/// Identifies the basis function `t^tpower · cos(harmonic·u)` (or `sin`).
///
/// Ordering is by `(tpower, harmonic, kind)`; series iterate in this order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub tpower: u32,
    pub harmonic: u32,
    pub kind: Kind,
}

impl TermKey {
    pub const fn cos(tpower: u32, harmonic: u32) -> Self {
        Self { tpower, harmonic, kind: Kind::Cos }
    }

    pub const fn sin(tpower: u32, harmonic: u32) -> Self {
        Self { tpower, harmonic, kind: Kind::Sin }
    }

    /// `sin(0·u)` vanishes identically and is never stored.
    pub fn is_null(&self) -> bool {
        self.kind == Kind::Sin && self.harmonic == 0
    }
}

/// One stored term of a [`TrigSeries`].
#[derive(Clone, Debug, PartialEq)]
pub struct TrigTerm<C = Rational> {
    pub key: TermKey,
    pub coeff: C,
}

/// Finite sum of `c · t^p · cos(k u)` and `c · t^p · sin(k u)` terms.
///
/// Canonical: zero coefficients are never stored and `sin(0 u)` keys are
/// rejected, so structural equality is mathematical equality. For the
/// non-secular engines `t` never appears (`p = 0`); for the naive expansion
/// `t` and `u` are the same variable.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigSeries<C = Rational> {
    terms: BTreeMap<TermKey, C>,
}

impl<C: Coefficient> Default for TrigSeries<C> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<C: Coefficient> TrigSeries<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: TermKey, coeff: C) -> Self {
        let mut s = Self::zero();
        s.accumulate(key, coeff);
        s
    }

    pub fn constant(c: C) -> Self {
        Self::term(TermKey::cos(0, 0), c)
    }

    /// `cos(k u)` with unit coefficient.
    pub fn cos(k: u32) -> Self {
        Self::term(TermKey::cos(0, k), C::one())
    }

    /// `sin(k u)` with unit coefficient.
    pub fn sin(k: u32) -> Self {
        Self::term(TermKey::sin(0, k), C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&TermKey, &C)> {
        self.terms.iter()
    }

    pub fn terms(&self) -> impl Iterator<Item = TrigTerm<C>> + '_ {
        self.terms.iter().map(|(k, c)| TrigTerm { key: *k, coeff: c.clone() })
    }

    /// Coefficient stored under `key`, zero if absent.
    pub fn coeff(&self, key: TermKey) -> C {
        self.terms.get(&key).cloned().unwrap_or_else(C::zero)
    }

    /// Highest power of `t` present; `None` for the empty series.
    pub fn max_tpower(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.tpower).max()
    }

    pub fn max_harmonic(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.harmonic).max()
    }

    pub fn is_secular_free(&self) -> bool {
        self.max_tpower().is_none_or(|p| p == 0)
    }

    pub(crate) fn last_term(&self) -> Option<(TermKey, C)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c.clone()))
    }

    /// Adds `coeff` to the term at `key`, keeping the series canonical.
    pub fn accumulate(&mut self, key: TermKey, coeff: C) {
        if key.is_null() || coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                let sum = slot.clone() + coeff;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.accumulate(*k, v.clone() * c.clone());
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.accumulate(*k, v.scale(r));
        }
        out
    }

    /// Exact derivative with respect to `u`, treating `t` as `u`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (key, c) in &self.terms {
            let TermKey { tpower: p, harmonic: k, kind } = *key;
            if p > 0 {
                out.accumulate(TermKey { tpower: p - 1, ..*key }, c.scale(&integer(p as i64)));
            }
            if k > 0 {
                let kc = c.scale(&integer(k as i64));
                match kind {
                    Kind::Cos => out.accumulate(TermKey::sin(p, k), -kc),
                    Kind::Sin => out.accumulate(TermKey::cos(p, k), kc),
                }
            }
        }
        out
    }

    /// Applies `y ↦ y″ + y`.
    pub fn harmonic_operator(&self) -> Self {
        &self.derivative().derivative() + self
    }

    /// Coefficients of `cos(u)` and `sin(u)` with no `t` factor: the part of
    /// a forcing function that drives `y″ + y` at resonance.
    pub fn resonant_part(&self) -> (C, C) {
        (self.coeff(TermKey::cos(0, 1)), self.coeff(TermKey::sin(0, 1)))
    }

    /// Value at `u = 0`. Only `cos` terms without a `t` factor contribute.
    pub fn value_at_zero(&self) -> C {
        self.terms
            .iter()
            .filter(|(k, _)| k.tpower == 0 && k.kind == Kind::Cos)
            .fold(C::zero(), |acc, (_, c)| acc + c.clone())
    }

    /// Maps every coefficient into another ring.
    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> TrigSeries<D> {
        let mut out = TrigSeries::zero();
        for (k, c) in &self.terms {
            out.accumulate(*k, f(c));
        }
        out
    }

    /// Numeric value at `u` (with `t = u`), given a way to turn coefficients into floats.
    pub fn eval_with(&self, u: f64, mut value: impl FnMut(&C) -> f64) -> f64 {
        self.terms
            .iter()
            .map(|(key, c)| {
                let angle = key.harmonic as f64 * u;
                let basis = match key.kind {
                    Kind::Cos => angle.cos(),
                    Kind::Sin => angle.sin(),
                };
                value(c) * u.powi(key.tpower as i32) * basis
            })
            .sum()
    }
}

impl TrigSeries<Rational> {
    pub fn eval(&self, u: f64) -> f64 {
        self.eval_with(u, to_f64)
    }
}

impl<C: Coefficient> Add<&TrigSeries<C>> for &TrigSeries<C> {
    type Output = TrigSeries<C>;

    fn add(self, rhs: &TrigSeries<C>) -> TrigSeries<C> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.accumulate(*k, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Add for TrigSeries<C> {
    type Output = TrigSeries<C>;

    fn add(mut self, rhs: TrigSeries<C>) -> TrigSeries<C> {
        for (k, c) in rhs.terms {
            self.accumulate(k, c);
        }
        self
    }
}

impl<C: Coefficient> Sub<&TrigSeries<C>> for &TrigSeries<C> {
    type Output = TrigSeries<C>;

    fn sub(self, rhs: &TrigSeries<C>) -> TrigSeries<C> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.accumulate(*k, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for TrigSeries<C> {
    type Output = TrigSeries<C>;

    fn sub(self, rhs: TrigSeries<C>) -> TrigSeries<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Neg for &TrigSeries<C> {
    type Output = TrigSeries<C>;

    fn neg(self) -> TrigSeries<C> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<C: Coefficient> Neg for TrigSeries<C> {
    type Output = TrigSeries<C>;

    fn neg(self) -> TrigSeries<C> {
        -&self
    }
}

impl<C: Coefficient> Mul<&TrigSeries<C>> for &TrigSeries<C> {
    type Output = TrigSeries<C>;

    /// Product-to-sum expansion:
    /// `cos a cos b = ½[cos(a−b) + cos(a+b)]`, `sin a sin b = ½[cos(a−b) − cos(a+b)]`,
    /// `sin a cos b = ½[sin(a+b) + sin(a−b)]`.
    fn mul(self, rhs: &TrigSeries<C>) -> TrigSeries<C> {
        let half = ratio(1, 2);
        let mut out = TrigSeries::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let c = (ca.clone() * cb.clone()).scale(&half);
                let p = ka.tpower + kb.tpower;
                let (a, b) = (ka.harmonic as i64, kb.harmonic as i64);
                let sum = (a + b) as u32;
                let diff = (a - b).unsigned_abs() as u32;
                match (ka.kind, kb.kind) {
                    (Kind::Cos, Kind::Cos) => {
                        out.accumulate(TermKey::cos(p, diff), c.clone());
                        out.accumulate(TermKey::cos(p, sum), c);
                    }
                    (Kind::Sin, Kind::Sin) => {
                        out.accumulate(TermKey::cos(p, diff), c.clone());
                        out.accumulate(TermKey::cos(p, sum), -c);
                    }
                    (Kind::Sin, Kind::Cos) => {
                        out.accumulate(TermKey::sin(p, sum), c.clone());
                        accumulate_signed_sin(&mut out, p, a - b, c);
                    }
                    (Kind::Cos, Kind::Sin) => {
                        out.accumulate(TermKey::sin(p, sum), c.clone());
                        accumulate_signed_sin(&mut out, p, b - a, c);
                    }
                }
            }
        }
        out
    }
}

fn accumulate_signed_sin<C: Coefficient>(out: &mut TrigSeries<C>, p: u32, k: i64, c: C) {
    match k.signum() {
        1 => out.accumulate(TermKey::sin(p, k as u32), c),
        -1 => out.accumulate(TermKey::sin(p, (-k) as u32), -c),
        _ => {}
    }
}

impl<C: Coefficient> Mul for TrigSeries<C> {
    type Output = TrigSeries<C>;

    fn mul(self, rhs: TrigSeries<C>) -> TrigSeries<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> fmt::Display for TrigSeries<C> {
    /// One term per line in key order: `num/den * t^p * cos(k u)`.
    /// The empty series prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (key, c) in &self.terms {
            let func = match key.kind {
                Kind::Cos => "cos",
                Kind::Sin => "sin",
            };
            writeln!(f, "{} * t^{} * {}({} u)", DisplayCoeff(c), key.tpower, func, key.harmonic)?;
        }
        Ok(())
    }
}

impl<C: Coefficient> FromIterator<(TermKey, C)> for TrigSeries<C> {
    fn from_iter<I: IntoIterator<Item = (TermKey, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.accumulate(k, c);
        }
        out
    }
}

impl<C: Coefficient> One for TrigSeries<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coefficient> Zero for TrigSeries<C> {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
