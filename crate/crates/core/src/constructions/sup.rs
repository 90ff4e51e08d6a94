use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::order::{compare, Budget, Comparison};
use crate::rational::{self, Rational};
use crate::real::{Oracle, Real};

/// The maximum of a nonempty finite family.
///
/// Answers `m ± eps` where `m` is the largest center among the members'
/// answers at `eps`; max is 1-Lipschitz, so `|m - sup| < eps`.
pub fn sup_finite(family: &[Real]) -> Result<Real> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(Real::from_oracle(FiniteSup(family.to_vec())))
}

struct FiniteSup(Vec<Real>);

impl Oracle for FiniteSup {
    fn approx(&self, eps: &Rational) -> Result<Interval> {
        let mut best: Option<Rational> = None;
        for a in &self.0 {
            let c = a.approx(eps)?.center().clone();
            if best.as_ref().is_none_or(|b| &c > b) {
                best = Some(c);
            }
        }
        Interval::new(best.expect("nonempty family"), eps.clone())
    }

    fn describe(&self) -> String {
        format!("sup({:?})", self.0)
    }
}

/// One precision of the least-upper-bound sift over a finite family.
///
/// For each member in order, takes `p` = center of its answer at `eps/2` and
/// keeps the first `p ± eps` for which every member certifiably satisfies
/// `a_j < p + eps`. The member nearest the maximum always qualifies, and the
/// result is an interval of radius `eps` containing the supremum.
pub fn completeness_sift(family: &[Real], eps: &Rational, budget: &Budget) -> Result<Interval> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let half = eps / rational::int(2);
    'candidates: for a in family {
        let p = a.approx(&half)?.center().clone();
        let top = Real::embed(&p + eps);
        for b in family {
            match compare(b, &top, budget)? {
                Comparison::Less { .. } => {}
                _ => continue 'candidates,
            }
        }
        return Interval::new(p, eps.clone());
    }
    Err(Error::BudgetExhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::sqrt_pos;
    use crate::order::distance_bound;
    use crate::rational::{int, rat, ten_to_minus};

    fn equal(a: &Real, b: &Real) -> bool {
        [1, 10, 30].iter().all(|&k| {
            let e = ten_to_minus(k);
            distance_bound(a, b, &e).unwrap() <= e * int(4)
        })
    }

    #[test]
    fn rational_max() {
        let s = sup_finite(&[1, 3, 2].map(Real::from_integer)).unwrap();
        assert!(equal(&s, &Real::from_integer(3)));
        let single = Real::embed(rat(5, 7));
        assert!(equal(
            &sup_finite(std::slice::from_ref(&single)).unwrap(),
            &single
        ));
    }

    #[test]
    fn sqrt_two_below_three_halves() {
        let sqrt2 = sqrt_pos(&Real::from_integer(2), &Budget::default()).unwrap();
        let s = sup_finite(&[sqrt2, Real::embed(rat(3, 2))]).unwrap();
        assert!(equal(&s, &Real::embed(rat(3, 2))));
    }

    #[test]
    fn sift_examples() {
        let fam = [Real::from_integer(0), Real::from_integer(1)];
        let got = completeness_sift(&fam, &rat(1, 2), &Budget::default()).unwrap();
        assert_eq!(got, Interval::new(int(1), rat(1, 2)).unwrap());
        let q = rat(-7, 3);
        let got = completeness_sift(&[Real::embed(q.clone())], &rat(1, 9), &Budget::default());
        assert_eq!(got.unwrap(), Interval::new(q, rat(1, 9)).unwrap());
    }

    #[test]
    fn sift_agrees_with_sup() {
        let sqrt3 = sqrt_pos(&Real::from_integer(3), &Budget::default()).unwrap();
        let fam = [Real::embed(rat(17, 10)), sqrt3, Real::embed(rat(-4, 1))];
        let eps = ten_to_minus(6);
        let sift = completeness_sift(&fam, &eps, &Budget::default()).unwrap();
        let sup = sup_finite(&fam).unwrap().approx(&eps).unwrap();
        assert!(sift.intersects(&sup));
    }

    #[test]
    fn empty_family() {
        assert_eq!(sup_finite(&[]).unwrap_err(), Error::EmptyFamily);
        assert_eq!(
            completeness_sift(&[], &rat(1, 2), &Budget::default()).unwrap_err(),
            Error::EmptyFamily
        );
    }
}
