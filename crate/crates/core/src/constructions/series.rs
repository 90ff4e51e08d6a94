use num_bigint::BigInt;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::{self, Rational};
use crate::real::{Oracle, Real};

/// Largest `n` accepted by [`liouville_check`].
pub const LIOUVILLE_CAP: u32 = 4;

/// `e = Σ_{k>=0} 1/k!`.
///
/// At precision `eps` answers the partial sum through the least `n` with
/// `2/(n+1)! <= eps`, with that radius; the tail `Σ_{k>n} 1/k!` is strictly
/// below `2/(n+1)!`.
pub fn e_const() -> Real {
    Real::from_oracle(EulerSeries)
}

struct EulerSeries;

impl Oracle for EulerSeries {
    fn approx(&self, eps: &Rational) -> Result<Interval> {
        let mut sum = Rational::one();
        let mut fact = BigInt::one();
        for n in 1u64.. {
            fact *= n;
            let tail = Rational::new(BigInt::from(2), fact.clone());
            if &tail <= eps {
                return Interval::new(sum, tail);
            }
            sum += Rational::new(BigInt::one(), fact.clone());
        }
        unreachable!()
    }

    fn describe(&self) -> String {
        "e".to_owned()
    }
}

/// `Σ_{n>=0} 10^(-n!)`. Because `0! = 1! = 1` the first two terms are both
/// `1/10`, so this is `0.2100010000...`; [`liouville_from`]`(1)` gives the
/// more familiar `0.1100010000...`.
pub fn liouville() -> Real {
    liouville_from(0)
}

/// `Σ_{n>=start} 10^(-n!)`.
///
/// At precision `eps` answers the partial sum through the least `n >= start`
/// with `2·10^(-(n+1)!) <= eps`, with that radius.
pub fn liouville_from(start: u32) -> Real {
    Real::from_oracle(LiouvilleSeries { start })
}

struct LiouvilleSeries {
    start: u32,
}

impl Oracle for LiouvilleSeries {
    fn approx(&self, eps: &Rational) -> Result<Interval> {
        for n in self.start.. {
            let radius = liouville_tail_bound(n)?;
            if &radius <= eps {
                return Interval::new(partial_sum_from(self.start, n)?, radius);
            }
        }
        unreachable!()
    }

    fn describe(&self) -> String {
        format!("liouville(start={})", self.start)
    }
}

fn factorial(n: u32) -> Result<u32> {
    (1..=n)
        .try_fold(1u32, |acc, k| acc.checked_mul(k))
        .ok_or_else(|| Error::OracleFailure(format!("{n}! does not fit a machine exponent")))
}

/// Strict upper bound `2·10^(-(n+1)!)` on `Σ_{k>n} 10^(-k!)`.
fn liouville_tail_bound(n: u32) -> Result<Rational> {
    Ok(rational::ten_to_minus(factorial(n + 1)?) * rational::int(2))
}

fn partial_sum_from(start: u32, n: u32) -> Result<Rational> {
    let mut sum = Rational::from_integer(BigInt::from(0));
    for k in start..=n {
        sum += rational::ten_to_minus(factorial(k)?);
    }
    Ok(sum)
}

/// `Σ_{k=0}^{n} 10^(-k!)`.
pub fn liouville_partial_sum(n: u32) -> Result<Rational> {
    partial_sum_from(0, n)
}

/// Exact check of one Liouville approximation for [`liouville`].
#[derive(Clone, Debug, PartialEq)]
pub struct LiouvilleReport {
    pub n: u32,
    pub p: BigInt,
    /// `10^(n!)`.
    pub q: BigInt,
    /// `1/q^n` minus the certified tail bound; positive iff `holds`.
    pub gap: Rational,
    /// `|L - p/q| < 1/q^n`, certified.
    pub holds: bool,
}

impl Serialize for LiouvilleReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("LiouvilleReport", 4)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("p", &self.p.to_string())?;
        s.serialize_field("q", &self.q.to_string())?;
        s.serialize_field("holds", &self.holds)?;
        s.end()
    }
}

/// [`liouville_check_capped`] with the default cap [`LIOUVILLE_CAP`].
pub fn liouville_check(n: u32) -> Result<LiouvilleReport> {
    liouville_check_capped(n, LIOUVILLE_CAP)
}

/// With `p/q` the partial sum through term `n` over `q = 10^(n!)`, decide
/// `|L - p/q| < 1/q^n` exactly: the difference is the tail, which is strictly
/// below `2·10^(-(n+1)!)`.
pub fn liouville_check_capped(n: u32, cap: u32) -> Result<LiouvilleReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".to_owned()));
    }
    if n > cap {
        return Err(Error::DeskScaleExceeded { n, cap });
    }
    let q = rational::pow10(factorial(n)?);
    let sum = liouville_partial_sum(n)?;
    let p = sum.numer() * (&q / sum.denom());
    debug_assert_eq!(Rational::new(p.clone(), q.clone()), sum);
    let threshold = Rational::new(BigInt::one(), num_traits::pow(q.clone(), n as usize));
    let gap = threshold - liouville_tail_bound(n)?;
    let holds = gap > Rational::from_integer(BigInt::from(0));
    Ok(LiouvilleReport {
        n,
        p,
        q,
        gap,
        holds,
    })
}
