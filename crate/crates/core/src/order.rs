//! Budgeted order relations on reals.
//!
//! `a < b` holds when some answer of `a` lies entirely below some answer of
//! `b`. That is semi-decidable: a strict order is eventually certified, but
//! equality never is. Every procedure here refines along `1, 1/2, 1/4, ...`
//! until a [`Budget`] runs out.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::{self, Rational};
use crate::real::Real;

/// Refinement limit: a precision floor, a step count, or both (whichever
/// triggers first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    min_epsilon: Option<Rational>,
    max_steps: Option<u32>,
}

impl Budget {
    /// Stop before precisions below `min_epsilon`. Panics unless `min_epsilon > 0`.
    pub fn min_epsilon(min_epsilon: Rational) -> Budget {
        assert!(min_epsilon.is_positive(), "budget floor must be positive");
        Budget {
            min_epsilon: Some(min_epsilon),
            max_steps: None,
        }
    }

    /// Stop after `max_steps` refinements. Panics if `max_steps == 0`.
    pub fn max_steps(max_steps: u32) -> Budget {
        assert!(max_steps >= 1, "budget needs at least one step");
        Budget {
            min_epsilon: None,
            max_steps: Some(max_steps),
        }
    }

    pub fn with_max_steps(mut self, max_steps: u32) -> Budget {
        assert!(max_steps >= 1, "budget needs at least one step");
        self.max_steps = Some(max_steps);
        self
    }

    /// Floor `10^(-k)`.
    pub fn decimal(k: u32) -> Budget {
        Budget::min_epsilon(rational::ten_to_minus(k))
    }

    pub fn floor(&self) -> Option<&Rational> {
        self.min_epsilon.as_ref()
    }

    pub fn steps(&self) -> Option<u32> {
        self.max_steps
    }

    /// `start, start/2, start/4, ...` while the budget allows. The first
    /// precision is always produced.
    pub fn schedule(&self, start: Rational) -> impl Iterator<Item = Rational> + '_ {
        let two = rational::int(2);
        std::iter::successors(Some(start), move |e| Some(e / &two))
            .enumerate()
            .take_while(move |(i, e)| {
                *i == 0
                    || (self.min_epsilon.as_ref().is_none_or(|m| e >= m)
                        && self.max_steps.is_none_or(|s| (*i as u64) < u64::from(s)))
            })
            .map(|(_, e)| e)
    }
}

impl Default for Budget {
    /// Floor `10^-40`.
    fn default() -> Self {
        Budget::decimal(40)
    }
}

/// Outcome of a budgeted comparison.
#[derive(Clone, Debug, PartialEq)]
pub enum Comparison {
    /// `a < b`, witnessed by answers with `left <∀ right`.
    Less { left: Interval, right: Interval },
    /// `a > b`, witnessed by answers with `right <∀ left`.
    Greater { left: Interval, right: Interval },
    /// No strict order found; `|a - b| <= gap_bound` (four times the last
    /// precision tried).
    Indeterminate { gap_bound: Rational },
}

impl Comparison {
    pub fn is_less(&self) -> bool {
        matches!(self, Comparison::Less { .. })
    }

    pub fn is_greater(&self) -> bool {
        matches!(self, Comparison::Greater { .. })
    }

    pub fn is_indeterminate(&self) -> bool {
        matches!(self, Comparison::Indeterminate { .. })
    }
}

/// Three-valued answer of a semi-decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

pub fn compare(a: &Real, b: &Real, budget: &Budget) -> Result<Comparison> {
    let mut last = Rational::one();
    for eps in budget.schedule(Rational::one()) {
        let left = a.approx(&eps)?;
        let right = b.approx(&eps)?;
        if left.lt_forall(&right) {
            return Ok(Comparison::Less { left, right });
        }
        if right.lt_forall(&left) {
            return Ok(Comparison::Greater { left, right });
        }
        last = eps;
    }
    Ok(Comparison::Indeterminate {
        gap_bound: last * rational::int(4),
    })
}

/// `|center(A) - center(B)| + radius(A) + radius(B)` for the answers at `eps`;
/// an upper bound on `|a - b|`, at most `4 eps` when `a = b`.
pub fn distance_bound(a: &Real, b: &Real, eps: &Rational) -> Result<Rational> {
    let x = a.approx(eps)?;
    let y = b.approx(eps)?;
    Ok((x.center() - y.center()).abs() + x.radius() + y.radius())
}

/// Is `q ± eps` a member of `a`? Decided as `q - eps < a < q + eps`.
///
/// `Unknown` whenever either comparison stays indeterminate; in particular
/// when `a` sits exactly on an endpoint.
pub fn member(q: &Rational, eps: &Rational, a: &Real, budget: &Budget) -> Result<Membership> {
    if !eps.is_positive() {
        return Err(Error::InvalidPrecision(eps.clone()));
    }
    let below = compare(&Real::embed(q - eps), a, budget)?;
    if below.is_greater() {
        return Ok(Membership::No);
    }
    let above = compare(a, &Real::embed(q + eps), budget)?;
    Ok(match (below.is_less(), &above) {
        (_, Comparison::Greater { .. }) => Membership::No,
        (true, Comparison::Less { .. }) => Membership::Yes,
        _ => Membership::Unknown,
    })
}

/// An integer `n` with `a < n`: `floor(sup approx(a, 1)) + 1`.
pub fn archimedean_bound(a: &Real) -> Result<BigInt> {
    let i = a.approx(&Rational::one())?;
    Ok(rational::floor(&i.hi()) + 1)
}

/// A rational strictly between `a` and `b`: the midpoint of the gap between
/// the witnesses of a certified `a < b`.
pub fn rational_between(a: &Real, b: &Real, budget: &Budget) -> Result<Rational> {
    match compare(a, b, budget)? {
        Comparison::Less { left, right } => Ok((left.hi() + right.lo()) / rational::int(2)),
        _ => Err(Error::NotSeparated),
    }
}
