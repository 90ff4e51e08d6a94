//! Open rational intervals `(c - r, c + r)` stored as center and radius.

use std::fmt;

use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The open interval `(center - radius, center + radius)` with `radius > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    center: Rational,
    radius: Rational,
}

impl Interval {
    pub fn new(center: Rational, radius: Rational) -> Result<Self> {
        if !radius.is_positive() {
            return Err(Error::NonPositiveRadius(radius));
        }
        Ok(Interval { center, radius })
    }

    /// The open interval `(lo, hi)`; requires `lo < hi`.
    pub fn from_endpoints(lo: &Rational, hi: &Rational) -> Result<Self> {
        let two = Rational::from_integer(2.into());
        Interval::new((lo + hi) / &two, (hi - lo) / two)
    }

    // Callers guarantee lo < hi.
    fn hull(lo: &Rational, hi: &Rational) -> Self {
        Interval::from_endpoints(lo, hi).expect("non-degenerate hull")
    }

    pub fn center(&self) -> &Rational {
        &self.center
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }

    /// Infimum (left endpoint).
    pub fn lo(&self) -> Rational {
        &self.center - &self.radius
    }

    /// Supremum (right endpoint).
    pub fn hi(&self) -> Rational {
        &self.center + &self.radius
    }

    pub fn length(&self) -> Rational {
        &self.radius * Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        (x - &self.center).abs() < self.radius
    }

    /// Elementwise sum; exact: `p_e + q_d = (p+q)_(e+d)`.
    pub fn sum(&self, other: &Interval) -> Interval {
        Interval {
            center: &self.center + &other.center,
            radius: &self.radius + &other.radius,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            center: -&self.center,
            radius: self.radius.clone(),
        }
    }

    /// Elementwise product: the hull of the four endpoint products, which is
    /// exactly the product set.
    pub fn mul(&self, other: &Interval) -> Interval {
        let (a, b) = (self.lo(), self.hi());
        let (c, d) = (other.lo(), other.hi());
        let products = [&a * &c, &a * &d, &b * &c, &b * &d];
        let lo = products.iter().min().expect("four products");
        let hi = products.iter().max().expect("four products");
        Interval::hull(lo, hi)
    }

    /// Elementwise reciprocal. The closure of `self` must exclude zero.
    pub fn recip(&self) -> Result<Interval> {
        let (lo, hi) = (self.lo(), self.hi());
        if !lo.is_positive() && !hi.is_negative() {
            return Err(Error::ContainsZero);
        }
        Ok(Interval::hull(&hi.recip(), &lo.recip()))
    }

    /// The `e`-enlargement `{x : |x - y| < e, y in self}`, again an interval.
    pub fn enlarge(&self, e: &Rational) -> Result<Interval> {
        if !e.is_positive() {
            return Err(Error::NonPositiveEnlargement(e.clone()));
        }
        Ok(Interval {
            center: self.center.clone(),
            radius: &self.radius + e,
        })
    }

    /// `x < y` for every `x` in `self` and `y` in `other`.
    pub fn lt_forall(&self, other: &Interval) -> bool {
        self.hi() <= other.lo()
    }

    /// `x <= y` for some `x` in `self` and some `y` in `other`.
    pub fn le_exists(&self, other: &Interval) -> bool {
        self.lo() < other.hi()
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        (&self.center - &other.center).abs() < &self.radius + &other.radius
    }

    /// The intersection, or `None` when the open intervals are disjoint.
    pub fn intersection(&self, other: &Interval) -> Option<Interval> {
        let lo = crate::rational::max(&self.lo(), &other.lo());
        let hi = crate::rational::min(&self.hi(), &other.hi());
        (lo < hi).then(|| Interval::hull(&lo, &hi))
    }

    /// `self ⊆ outer`, comparing endpoints inclusively.
    pub fn is_subset_of(&self, outer: &Interval) -> bool {
        outer.lo() <= self.lo() && self.hi() <= outer.hi()
    }

    /// The margin `m > 0` with `self ⊆ (outer.lo + m, outer.hi - m)` when
    /// `self` is deeply contained in `outer`.
    pub fn deep_margin(&self, outer: &Interval) -> Option<Rational> {
        let left = self.lo() - outer.lo();
        let right = outer.hi() - self.hi();
        let m = crate::rational::min(&left, &right);
        m.is_positive().then_some(m)
    }

    pub fn is_deep_subset_of(&self, outer: &Interval) -> bool {
        self.deep_margin(outer).is_some()
    }

    /// Five intervals of equal length partitioning `self`, left to right.
    pub fn fifths(&self) -> [Interval; 5] {
        let r = &self.radius / Rational::from_integer(5.into());
        let lo = self.lo();
        std::array::from_fn(|k| Interval {
            center: &lo + &r * Rational::from_integer((2 * k as i64 + 1).into()),
            radius: r.clone(),
        })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}±{}", self.center, self.radius)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Interval", 2)?;
        s.serialize_field("center", &self.center.to_string())?;
        s.serialize_field("radius", &self.radius.to_string())?;
        s.end()
    }
}
