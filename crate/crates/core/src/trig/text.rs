//! Parser for the line-per-term series text format written by `Display`.

use std::str::FromStr;

use num_bigint::BigInt;

use super::coeff::Rational;
use super::series::{Kind, TermKey, TrigSeries};
use crate::error::Error;

impl FromStr for TrigSeries<Rational> {
    type Err = Error;

    /// Accepts `num/den * t^p * cos(k u)` lines (or `sin`); blank lines are
    /// skipped and a lone `0` denotes the empty series.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut out = TrigSeries::zero();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if line == "0" {
                continue;
            }
            let (key, c) = parse_term(line).ok_or_else(|| Error::Parse(line.to_string()))?;
            out.accumulate(key, c);
        }
        Ok(out)
    }
}

fn parse_term(line: &str) -> Option<(TermKey, Rational)> {
    let mut parts = line.split(" * ");
    let coeff = parts.next()?;
    let tpow = parts.next()?.strip_prefix("t^")?.parse::<u32>().ok()?;
    let func = parts.next()?;
    if parts.next().is_some() {
        return None;
    }

    let (num, den) = coeff.split_once('/')?;
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }

    let (kind, rest) = if let Some(rest) = func.strip_prefix("cos(") {
        (Kind::Cos, rest)
    } else {
        (Kind::Sin, func.strip_prefix("sin(")?)
    };
    let harmonic = rest.strip_suffix(" u)")?.parse::<u32>().ok()?;
    let key = TermKey { tpower: tpow, harmonic, kind };
    if key.is_null() {
        return None;
    }
    Some((key, Rational::new(num, den)))
}
