//! Coefficient rings for trigonometric series.

use std::fmt;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// `BigRational` keeps itself in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds `num/den` as an exact rational. Panics on `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as an exact rational.
pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Converts an exact rational to the nearest `f64` (NaN if it does not fit).
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// A commutative ring that is also a vector space over the rationals.
///
/// Everything the series algebra does (products, derivatives, solving the
/// driven harmonic equation) needs only ring operations plus division by
/// rational constants.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    /// Multiplies by an exact rational scalar.
    fn scale(&self, r: &Rational) -> Self;

    /// Writes the coefficient in the series text format.
    fn write_coeff(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl Coefficient for Rational {
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    /// Always `num/den`, including integers (`1/1`) and zero (`0/1`).
    fn write_coeff(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            write!(f, "-{}/{}", self.numer().abs(), self.denom())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// Adapter so a bare coefficient can be formatted with `{}`.
pub struct DisplayCoeff<'a, C>(pub &'a C);

impl<C: Coefficient> fmt::Display for DisplayCoeff<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write_coeff(f)
    }
}
