//! Bivariate polynomials with rational coefficients.
//!
//! Used as the coefficient ring when a perturbation recursion carries free
//! parameters (the variational engine works in `p = λ/(1+α²)` and
//! `q = α²/(1+α²)`), so the recursion stays exact and is run only once.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::coeff::{to_f64, Coefficient, DisplayCoeff, Rational};

/// Polynomial in two variables `p`, `q`; keys are exponent pairs `(i, j)` of `p^i q^j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c · p^i · q^j`
    pub fn monomial(i: u32, j: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn p() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn q() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    /// Coefficient of `p^i q^j` (zero when absent).
    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// Restriction to `q = 0`, as a list of coefficients of `p^0, p^1, ...`.
    pub fn at_q_zero(&self) -> Vec<Rational> {
        let len = self.terms.keys().filter(|(_, j)| *j == 0).map(|(i, _)| *i as usize + 1).max().unwrap_or(0);
        let mut out = vec![Rational::zero(); len];
        for ((i, j), c) in &self.terms {
            if *j == 0 {
                out[*i as usize] = c.clone();
            }
        }
        out
    }

    pub fn eval(&self, p: f64, q: f64) -> f64 {
        self.terms.iter().map(|((i, j), c)| to_f64(c) * p.powi(*i as i32) * q.powi(*j as i32)).sum()
    }

    fn accumulate(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(mut self, rhs: BiPoly) -> BiPoly {
        for (k, c) in rhs.terms {
            self.accumulate(k, c);
        }
        self
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: BiPoly) -> BiPoly {
        self + (-rhs)
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;

    fn neg(mut self) -> BiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: BiPoly) -> BiPoly {
        let mut out = BiPoly::default();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &rhs.terms {
                out.accumulate((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        BiPoly::constant(Rational::one())
    }
}

impl Coefficient for BiPoly {
    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return BiPoly::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect() }
    }

    fn write_coeff(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for BiPoly {
    /// Terms as `c * p^i * q^j` joined by ` + `; `0/1` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0/1");
        }
        for (n, ((i, j), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} * p^{} * q^{}", DisplayCoeff(c), i, j)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trig::coeff::ratio;

    #[test]
    fn product_expands() {
        // (p - q)(p + q) = p^2 - q^2
        let a = BiPoly::p() - BiPoly::q();
        let b = BiPoly::p() + BiPoly::q();
        let prod = a * b;
        assert_eq!(prod.coeff(2, 0), ratio(1, 1));
        assert_eq!(prod.coeff(1, 1), ratio(0, 1));
        assert_eq!(prod.coeff(0, 2), ratio(-1, 1));
        assert_eq!(prod.degree(), Some(2));
    }

    #[test]
    fn cancellation_leaves_zero() {
        let a = BiPoly::p().scale(&ratio(3, 4));
        assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn evaluates() {
        let a = BiPoly::monomial(2, 1, ratio(3, 2)) + BiPoly::constant(ratio(1, 1));
        assert_eq!(a.eval(2.0, 3.0), 1.0 + 1.5 * 4.0 * 3.0);
    }

    #[test]
    fn restriction_to_q_zero() {
        let a = BiPoly::monomial(2, 0, ratio(5, 1)) + BiPoly::monomial(1, 1, ratio(7, 1));
        assert_eq!(a.at_q_zero(), vec![ratio(0, 1), ratio(0, 1), ratio(5, 1)]);
    }
}
