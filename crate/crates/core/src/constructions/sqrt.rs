use num_traits::Signed;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::order::{compare, Budget, Comparison};
use crate::rational::{self, Rational};
use crate::real::{Oracle, Real};

/// Square root of a real certified positive within `budget`.
///
/// Answers by bisection over dyadic rationals against exact squaring: an answer
/// `(l, u)` of `a` maps to `(L, U)` with `L <= sqrt(l)` and `U >= sqrt(u)`.
pub fn sqrt_pos(a: &Real, budget: &Budget) -> Result<Real> {
    let floor = match compare(&Real::from_integer(0), a, budget)? {
        Comparison::Less { right, .. } => right.lo(),
        _ => return Err(Error::SignUnknown),
    };
    debug_assert!(floor.is_positive());
    // s = 2^-k with s² <= floor/2.
    let half_floor = &floor / rational::int(2);
    let mut s = rational::int(1);
    while &s * &s > half_floor {
        s /= rational::int(2);
    }
    Ok(Real::from_oracle(SquareRoot {
        inner: a.clone(),
        floor,
        s,
    }))
}

struct SquareRoot {
    inner: Real,
    /// `inner > floor > 0`.
    floor: Rational,
    /// `s² <= floor/2`, so `sqrt(x) >= s` for every `x >= floor/2`.
    s: Rational,
}

impl Oracle for SquareRoot {
    fn approx(&self, eps: &Rational) -> Result<Interval> {
        // An answer of radius d <= floor/4 has lo > floor/2. Then
        // sqrt(u) - sqrt(l) <= (u - l) / (2 s) <= d / s <= eps/2.
        let d = rational::min(
            &(&self.floor / rational::int(4)),
            &(&self.s * eps / rational::int(2)),
        );
        let a = self.inner.approx(&rational::dyadic_floor(&d))?;
        let tol = eps / rational::int(4);
        let lower = bisect_sqrt(&a.lo(), &tol, Side::Below);
        let upper = bisect_sqrt(&a.hi(), &tol, Side::Above);
        Interval::from_endpoints(&lower, &upper)
    }

    fn describe(&self) -> String {
        format!("sqrt({:?})", self.inner)
    }
}

#[derive(Clone, Copy)]
enum Side {
    /// Return `r` with `r² <= x` and `sqrt(x) - r <= tol`.
    Below,
    /// Return `r` with `r² >= x` and `r - sqrt(x) <= tol`.
    Above,
}

fn bisect_sqrt(x: &Rational, tol: &Rational, side: Side) -> Rational {
    let mut lo = rational::int(0);
    // An integer >= max(1, x) squares to at least x.
    let mut hi = Rational::from_integer(rational::floor(x) + 1).max(rational::int(1));
    let two = rational::int(2);
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        let sq = &mid * &mid;
        let go_up = match side {
            Side::Below => &sq <= x,
            Side::Above => &sq < x,
        };
        if go_up {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    match side {
        Side::Below => lo,
        Side::Above => hi,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decimal::to_decimal;
    use crate::order::distance_bound;
    use crate::rational::{int, rat, ten_to_minus};

    #[test]
    fn perfect_squares() {
        let b = Budget::default();
        for (x, r) in [(4, 2), (1, 1), (9, 3)] {
            let s = sqrt_pos(&Real::from_integer(x), &b).unwrap();
            for k in [1, 5, 20, 40] {
                let e = ten_to_minus(k);
                let d = distance_bound(&s, &Real::from_integer(r), &e).unwrap();
                assert!(d <= &e * int(4), "sqrt({x}) at 1e-{k}: {d}");
            }
        }
    }

    #[test]
    fn sqrt_two_digits() {
        let s = sqrt_pos(&Real::from_integer(2), &Budget::default()).unwrap();
        let d = to_decimal(&s, 10, &Budget::decimal(30)).unwrap();
        assert!(
            ["1.4142135623", "1.4142135624"].contains(&d.digits.as_str()),
            "{}",
            d
        );
    }

    #[test]
    fn nonpositive_is_rejected() {
        let b = Budget::decimal(20);
        assert_eq!(
            sqrt_pos(&Real::from_integer(0), &b).unwrap_err(),
            Error::SignUnknown
        );
        assert_eq!(
            sqrt_pos(&Real::from_integer(-4), &b).unwrap_err(),
            Error::SignUnknown
        );
    }

    #[test]
    fn bisection_brackets() {
        for x in [rat(1, 3), rat(2, 1), rat(1, 1000), rat(12345, 7)] {
            let tol = rat(1, 1 << 20);
            let lo = bisect_sqrt(&x, &tol, Side::Below);
            let hi = bisect_sqrt(&x, &tol, Side::Above);
            assert!(&lo * &lo <= x && x <= &hi * &hi);
            assert!(&hi - &lo <= &tol * int(2));
        }
    }
}
