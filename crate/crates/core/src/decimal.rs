//! Certified decimal printing.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::interval::Interval;
use crate::order::Budget;
use crate::rational::{self, Rational};
use crate::real::Real;

/// A decimal rendering of a real with its certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct Decimal {
    /// Sign, integer part, `.`, exactly `digits` fractional digits.
    pub digits: String,
    /// The enclosure the digits were read from.
    pub interval: Interval,
    /// Both endpoints of `interval` round to `digits`, so `digits` is the
    /// correctly rounded value. When false the rounding could not be decided
    /// within the budget.
    pub settled: bool,
    /// Certified bound on `|value - digits|`; always below `10^-d`.
    pub error_bound: Rational,
}

impl Decimal {
    pub fn value(&self) -> Rational {
        parse_decimal(&self.digits)
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits)?;
        if !self.settled {
            f.write_str("?")?;
        }
        Ok(())
    }
}

/// Renders `a` with exactly `digits` fractional digits such that
/// `|a - value| < 10^-digits`.
///
/// Starts at precision `10^-(digits+2)` and halves while the two endpoints of
/// the enclosure round differently, up to `budget`. If the budget runs out the
/// midpoint's rounding is used and the result is marked unsettled (rendered
/// with a trailing `?`).
pub fn to_decimal(a: &Real, digits: u32, budget: &Budget) -> Result<Decimal> {
    let start = rational::ten_to_minus(digits + 2);
    let mut last = None;
    for eps in budget.schedule(start) {
        let i = a.approx(&eps)?;
        let lo = round_scaled(&i.lo(), digits);
        let hi = round_scaled(&i.hi(), digits);
        if lo == hi {
            return Ok(finish(lo, digits, i, true));
        }
        last = Some(i);
    }
    let i = last.expect("schedule yields at least one precision");
    let mid = round_scaled(i.center(), digits);
    Ok(finish(mid, digits, i, false))
}

fn finish(scaled: BigInt, digits: u32, interval: Interval, settled: bool) -> Decimal {
    let text = format_scaled(&scaled, digits);
    let value = Rational::new(scaled, rational::pow10(digits));
    let error_bound = (interval.center() - value).abs() + interval.radius();
    Decimal {
        digits: text,
        interval,
        settled,
        error_bound,
    }
}

/// `floor(x * 10^digits + 1/2)`.
fn round_scaled(x: &Rational, digits: u32) -> BigInt {
    let scaled = x * Rational::from_integer(rational::pow10(digits)) + rational::rat(1, 2);
    rational::floor(&scaled)
}

fn format_scaled(n: &BigInt, digits: u32) -> String {
    let sign = if n.is_negative() { "-" } else { "" };
    let mut body = n.abs().to_string();
    let width = digits as usize + 1;
    if body.len() < width {
        body = format!("{}{}", "0".repeat(width - body.len()), body);
    }
    if digits == 0 {
        return format!("{sign}{body}");
    }
    let (int_part, frac) = body.split_at(body.len() - digits as usize);
    format!("{sign}{int_part}.{frac}")
}

/// Exact value of a string produced by [`to_decimal`] (a trailing `?` is ignored).
pub fn parse_decimal(s: &str) -> Rational {
    let s = s.trim_end_matches('?');
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let v = match body.split_once('.') {
        Some((w, f)) => rational::decimal_to_rational(w, f),
        None => Rational::from_integer(body.parse().unwrap_or_else(|_| BigInt::zero())),
    };
    if neg {
        -v
    } else {
        v
    }
}
