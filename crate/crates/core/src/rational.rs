//! Exact rational scalars.
//!
//! Everything in this crate is built from [`Rational`], an arbitrary precision
//! fraction kept in lowest terms with a positive denominator. The type itself
//! is `num_rational::BigRational`; this module adds the text format and a few
//! constructors used throughout.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Error produced when a string is not a valid rational literal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {text:?}: {reason}")]
pub struct ParseRationalError {
    pub text: String,
    pub reason: &'static str,
}

/// Shorthand for `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `10^k` as a big integer.
pub fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), k as usize)
}

/// `10^(-k)` as a rational.
pub fn ten_to_minus(k: u32) -> Rational {
    Rational::new(BigInt::one(), pow10(k))
}

/// `2^(-k)` as a rational.
pub fn two_to_minus(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << k)
}

/// Largest power of two `2^k` (k may be negative) that is `<= x`. Requires `x > 0`.
pub fn dyadic_floor(x: &Rational) -> Rational {
    debug_assert!(x.is_positive());
    let n = x.numer().bits() as i64;
    let d = x.denom().bits() as i64;
    // 2^(n-1) <= numer < 2^n and 2^(d-1) <= denom < 2^d, so x lies in (2^(n-d-1), 2^(n-d+1)).
    let mut k = n - d + 1;
    loop {
        let p = pow2(k);
        if &p <= x {
            return p;
        }
        k -= 1;
    }
}

fn pow2(k: i64) -> Rational {
    if k >= 0 {
        Rational::from_integer(BigInt::one() << k as u64)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-k) as u64)
    }
}

/// Parses the rational text format: an optional sign, an integer, then either
/// an optional `/` and positive integer, or a `.` and fractional digits.
///
/// `"-7/3"`, `"3.25"` (= 13/4), `"+4"` are all accepted.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = |reason| ParseRationalError {
        text: text.to_owned(),
        reason,
    };
    let s = text.trim();
    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        Some(_) => (false, s),
        None => return Err(err("empty input")),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let value = if let Some((whole, frac)) = body.split_once('.') {
        if !digits(whole) || !digits(frac) {
            return Err(err("expected digits around '.'"));
        }
        decimal_to_rational(whole, frac)
    } else if let Some((num, den)) = body.split_once('/') {
        if !digits(num) || !digits(den) {
            return Err(err("expected digits around '/'"));
        }
        let den: BigInt = den.parse().expect("digits");
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        Rational::new(num.parse().expect("digits"), den)
    } else {
        if !digits(body) {
            return Err(err("expected an integer"));
        }
        Rational::from_integer(body.parse().expect("digits"))
    };
    Ok(if negative { -value } else { value })
}

/// Exact value of the decimal literal `whole.frac`; both parts are ASCII digits.
pub(crate) fn decimal_to_rational(whole: &str, frac: &str) -> Rational {
    let scale = pow10(frac.len() as u32);
    let all: BigInt = format!("{whole}{frac}").parse().expect("digits");
    Rational::new(all, scale)
}

/// Newtype giving [`Rational`] `FromStr` with the decimal extension, for CLI
/// argument parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalArg(pub Rational);

impl FromStr for RationalArg {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s).map(RationalArg)
    }
}

impl fmt::Display for RationalArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `floor(x)` as an integer.
pub fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

pub fn max(a: &Rational, b: &Rational) -> Rational {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn min(a: &Rational, b: &Rational) -> Rational {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("-7/3").unwrap(), rat(-7, 3));
        assert_eq!(parse_rational("3.25").unwrap(), rat(13, 4));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("+12").unwrap(), int(12));
        assert_eq!(parse_rational("0/5").unwrap(), int(0));
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "", "-", "1/0", "1/", "/2", "1.", ".5", "1/-2", "1.2.3", "a", "1 /2",
        ] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn canonical_output() {
        assert_eq!(parse_rational("-14/6").unwrap().to_string(), "-7/3");
        assert_eq!(parse_rational("8/4").unwrap().to_string(), "2");
        assert_eq!(int(0).to_string(), "0");
    }

    #[test]
    fn dyadic_floor_is_tight() {
        for (x, expect) in [
            (rat(1, 1), rat(1, 1)),
            (rat(3, 1), rat(2, 1)),
            (rat(1, 3), rat(1, 4)),
            (rat(1, 4), rat(1, 4)),
            (rat(7, 1000), rat(1, 256)),
        ] {
            assert_eq!(dyadic_floor(&x), expect, "x = {x}");
        }
    }

    #[test]
    fn floor_rounds_toward_negative_infinity() {
        assert_eq!(floor(&rat(7, 2)), BigInt::from(3));
        assert_eq!(floor(&rat(-7, 2)), BigInt::from(-4));
        assert_eq!(floor(&int(-9)), BigInt::from(-9));
    }
}
