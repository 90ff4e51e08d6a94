//! Real numbers as approximation oracles.
//!
//! A [`Real`] answers every precision `eps > 0` with an open rational interval
//! of radius at most `eps` containing the number. All answers pairwise
//! intersect, so the round filter they generate (all supersets of all
//! enlargements of answers) is a minimal Cauchy filter: the answers are a
//! generating family for the number as a filter of rational sets.
//!
//! Both contracts are enforced at runtime. Every answer is checked against the
//! tightest interval seen so far (the running intersection of all answers); a
//! radius overshoot or a disjoint answer is reported as
//! [`Error::Invariant`] instead of silently producing a wrong enclosure.

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::order::Budget;
use crate::rational::{self, Rational};

/// A source of enclosures for one real number.
///
/// Implementations must return, for each `eps > 0`, an interval of radius
/// `<= eps` whose interior contains the number. [`Real::approx`] checks the
/// radius bound and mutual consistency of answers.
pub trait Oracle: Send + Sync {
    fn approx(&self, eps: &Rational) -> Result<Interval>;

    /// Short description used by `Debug`.
    fn describe(&self) -> String {
        "oracle".to_owned()
    }
}

/// A real number. Cheap to clone; clones share the answer cache.
#[derive(Clone)]
pub struct Real(Arc<Node>);

struct Node {
    kind: Kind,
    cache: Mutex<Option<Interval>>,
    bound: OnceLock<Rational>,
}

enum Kind {
    Exact(Rational),
    Computed(Box<dyn Oracle>),
}

impl Real {
    /// The embedding `q ↦ ι(q)`: answers `q ± eps` at every precision.
    pub fn embed(q: Rational) -> Real {
        Real::from_kind(Kind::Exact(q))
    }

    pub fn from_integer(n: i64) -> Real {
        Real::embed(rational::int(n))
    }

    pub fn from_oracle(oracle: impl Oracle + 'static) -> Real {
        Real::from_kind(Kind::Computed(Box::new(oracle)))
    }

    fn from_kind(kind: Kind) -> Real {
        Real(Arc::new(Node {
            kind,
            cache: Mutex::new(None),
            bound: OnceLock::new(),
        }))
    }

    /// The exact value when this real was built by [`Real::embed`].
    pub fn as_rational(&self) -> Option<&Rational> {
        match &self.0.kind {
            Kind::Exact(q) => Some(q),
            Kind::Computed(_) => None,
        }
    }

    /// An interval of radius `<= eps` containing this number.
    pub fn approx(&self, eps: &Rational) -> Result<Interval> {
        if !eps.is_positive() {
            return Err(Error::InvalidPrecision(eps.clone()));
        }
        let oracle = match &self.0.kind {
            Kind::Exact(q) => return Interval::new(q.clone(), eps.clone()),
            Kind::Computed(oracle) => oracle,
        };
        if let Some(hit) = self.cached_within(eps) {
            return Ok(hit);
        }
        // Computed without holding the lock: concurrent callers may duplicate
        // work, but merging below is atomic.
        let answer = oracle.approx(eps)?;
        if answer.radius() > eps {
            return Err(Error::Invariant(format!(
                "{} answered radius {} for precision {}",
                oracle.describe(),
                answer.radius(),
                eps
            )));
        }
        let mut cache = self.0.cache.lock().unwrap_or_else(|p| p.into_inner());
        let merged = match cache.as_ref() {
            None => answer.clone(),
            Some(seen) => seen.intersection(&answer).ok_or_else(|| {
                Error::Invariant(format!(
                    "{} answered {} disjoint from earlier {}",
                    oracle.describe(),
                    answer,
                    seen
                ))
            })?,
        };
        *cache = Some(merged);
        Ok(answer)
    }

    fn cached_within(&self, eps: &Rational) -> Option<Interval> {
        let cache = self.0.cache.lock().unwrap_or_else(|p| p.into_inner());
        cache.as_ref().filter(|c| c.radius() <= eps).cloned()
    }

    /// The tightest interval answered so far, if any.
    pub fn tightest(&self) -> Option<Interval> {
        self.0
            .cache
            .lock()
            .unwrap_or_else(|p| p.into_inner())
            .clone()
    }

    /// A rational `M > 0` with `|x| < M` for every `x` in `approx(1)`:
    /// `|center| + radius + 1` of that interval. Memoized.
    pub fn bound(&self) -> Result<Rational> {
        if let Some(m) = self.0.bound.get() {
            return Ok(m.clone());
        }
        let i = self.approx(&Rational::one())?;
        let m = i.center().abs() + i.radius() + Rational::one();
        Ok(self.0.bound.get_or_init(|| m).clone())
    }

    pub fn neg(&self) -> Real {
        Real::from_oracle(Negation(self.clone()))
    }

    pub fn add(&self, other: &Real) -> Real {
        Real::from_oracle(Sum(self.clone(), other.clone()))
    }

    pub fn sub(&self, other: &Real) -> Real {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Real) -> Real {
        Real::from_oracle(Product(self.clone(), other.clone()))
    }

    /// The reciprocal, after certifying `self != 0` within `budget`.
    ///
    /// Fails with [`Error::SignUnknown`] when no answer at precisions
    /// `1, 1/2, 1/4, ...` (down to the budget) excludes zero.
    pub fn recip(&self, budget: &Budget) -> Result<Real> {
        for eps in budget.schedule(Rational::one()) {
            let w = self.approx(&eps)?;
            let gap = w.center().abs() - w.radius();
            if gap.is_positive() {
                // |self| > gap, so every answer at precision <= gap/4 stays
                // at distance > gap/2 from zero.
                let eta = gap / rational::int(2);
                return Ok(Real::from_oracle(Reciprocal {
                    inner: self.clone(),
                    eta,
                    witness: w,
                }));
            }
        }
        Err(Error::SignUnknown)
    }

    pub fn div(&self, other: &Real, budget: &Budget) -> Result<Real> {
        Ok(self.mul(&other.recip(budget)?))
    }

    /// `self^n` by repeated squaring; negative `n` inverts first.
    pub fn powi(&self, n: i64, budget: &Budget) -> Result<Real> {
        let mut base = if n < 0 {
            self.recip(budget)?
        } else {
            self.clone()
        };
        let mut k = n.unsigned_abs();
        let mut acc: Option<Real> = None;
        while k > 0 {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc.unwrap_or_else(|| Real::from_integer(1)))
    }
}

impl From<Rational> for Real {
    fn from(q: Rational) -> Self {
        Real::embed(q)
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            Kind::Exact(q) => write!(f, "Real({q})"),
            Kind::Computed(o) => write!(f, "Real({})", o.describe()),
        }
    }
}

struct Negation(Real);

impl Oracle for Negation {
    fn approx(&self, eps: &Rational) -> Result<Interval> {
        Ok(self.0.approx(eps)?.neg())
    }

    fn describe(&self) -> String {
        format!("neg({:?})", self.0)
    }
}

struct Sum(Real, Real);

impl Oracle for Sum {
    fn approx(&self, eps: &Rational) -> Result<Interval> {
        let half = eps / rational::int(2);
        Ok(self.0.approx(&half)?.sum(&self.1.approx(&half)?))
    }

    fn describe(&self) -> String {
        format!("add({:?}, {:?})", self.0, self.1)
    }
}

/// Operand precision for a product answering at `eps` when both factors are
/// bounded by `m`: `(eps/2) / (m + eps)`.
///
/// With `|x| < m` on the unit-precision answers, operand answers of radius
/// `delta` have magnitude below `m - 1 + 2 delta`, and the product hull then has
/// length at most `4 delta (m - 1 + 2 delta) < 2 eps`, i.e. radius `< eps`.
pub fn product_precision(eps: &Rational, m: &Rational) -> Rational {
    (eps / rational::int(2)) / (m + eps)
}

struct Product(Real, Real);

impl Oracle for Product {
    fn approx(&self, eps: &Rational) -> Result<Interval> {
        let m = rational::max(&self.0.bound()?, &self.1.bound()?);
        let delta = rational::dyadic_floor(&product_precision(eps, &m));
        Ok(self.0.approx(&delta)?.mul(&self.1.approx(&delta)?))
    }

    fn describe(&self) -> String {
        format!("mul({:?}, {:?})", self.0, self.1)
    }
}

struct Reciprocal {
    inner: Real,
    /// Every answer of `inner` at precision <= eta/2 lies outside (-eta, eta).
    eta: Rational,
    witness: Interval,
}

impl Oracle for Reciprocal {
    fn approx(&self, eps: &Rational) -> Result<Interval> {
        // Width of 1/(p ± d) is 2d / (p² - d²) < 2d / eta², so d = eta² eps / 2
        // gives length < eps.
        let d = rational::min(
            &(&self.eta / rational::int(2)),
            &(&self.eta * &self.eta * eps / rational::int(2)),
        );
        let d = rational::dyadic_floor(&d);
        let a = self.inner.approx(&d)?;
        a.recip().map_err(|_| {
            Error::Invariant(format!("answer {a} of a sign-certified real contains zero"))
        })
    }

    fn describe(&self) -> String {
        format!("recip({:?}, witness {})", self.inner, self.witness)
    }
}
