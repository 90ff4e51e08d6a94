//! Sequences of reals and convergence in filter form.
//!
//! A sequence `(a_n)` converges to `b` iff every member `B` of `b` is
//! eventually a member of every `a_n`. Neither quantifier is decidable, so the
//! checks here are relative to a horizon (the last index examined) and a
//! budget, and report what they actually certified.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::order::{member, Budget, Membership};
use crate::rational::{self, Rational};
use crate::real::{Oracle, Real};

/// `n ↦ a_n` for `n >= 1`.
#[derive(Clone)]
pub struct RealSequence {
    term: Arc<dyn Fn(u64) -> Real + Send + Sync>,
}

impl RealSequence {
    pub fn new(term: impl Fn(u64) -> Real + Send + Sync + 'static) -> Self {
        RealSequence {
            term: Arc::new(term),
        }
    }

    pub fn term(&self, n: u64) -> Real {
        (self.term)(n)
    }
}

impl std::fmt::Debug for RealSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("RealSequence")
    }
}

/// The limit of a Cauchy sequence with a known modulus.
///
/// `modulus(eps)` must be an index past which terms are pairwise within `eps`,
/// or `None` when that index is out of range; such precisions fail with
/// [`Error::OracleFailure`]. Answers `approx(a_m, eps/2)` enlarged by `eps/2`, with `m = modulus(eps/2)`.
/// A wrong modulus shows up later as an inconsistent answer.
pub fn real_of_cauchy(
    seq: &RealSequence,
    modulus: impl Fn(&Rational) -> Option<u64> + Send + Sync + 'static,
) -> Real {
    Real::from_oracle(CauchyLimit {
        seq: seq.clone(),
        modulus: Box::new(modulus),
    })
}

type Modulus = Box<dyn Fn(&Rational) -> Option<u64> + Send + Sync>;

struct CauchyLimit {
    seq: RealSequence,
    modulus: Modulus,
}

impl Oracle for CauchyLimit {
    fn approx(&self, eps: &Rational) -> Result<Interval> {
        let half = eps / rational::int(2);
        let m = (self.modulus)(&half)
            .ok_or_else(|| Error::OracleFailure(format!("no index for precision {half}")))?
            .max(1);
        self.seq.term(m).approx(&half)?.enlarge(&half)
    }

    fn describe(&self) -> String {
        "cauchy-limit".to_owned()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Converged,
    DivergedAtBudget,
    Unknown,
}

/// One sampled member `center ± radius` of the candidate limit and what the
/// scan over `from..=to` certified for it.
#[derive(Clone, Debug, PartialEq)]
pub struct MemberCheck {
    pub center: Rational,
    pub radius: Rational,
    /// With `Yes`: the least `n0` such that every term in `n0..=to` contains
    /// the member. Otherwise equal to `to`, where the deciding verdict was read.
    pub from: u64,
    pub to: u64,
    pub result: Membership,
}

impl Serialize for MemberCheck {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("MemberCheck", 5)?;
        s.serialize_field("center", &self.center.to_string())?;
        s.serialize_field("radius", &self.radius.to_string())?;
        s.serialize_field("from", &self.from)?;
        s.serialize_field("to", &self.to)?;
        s.serialize_field("result", &self.result)?;
        s.end()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceEvidence {
    pub verdict: Verdict,
    /// When converged: an index working for every sampled member.
    pub n0: Option<u64>,
    pub checks: Vec<MemberCheck>,
}

/// Tests `seq → b` on the members `q ± eps` of `b`, with `q` the center of
/// `approx(b, eps)` and `eps = 1, 1/2, ...` down to `sample_floor`.
///
/// For each member, finds the least `n0 <= horizon` such that `member` is
/// `Yes` for every index in `n0..=horizon`. Converged when every member has
/// one; diverged when some member is certified `No` at the horizon; unknown
/// otherwise. Membership is decided with `budget`, which must be much finer
/// than `sample_floor` for near-boundary terms to resolve.
pub fn check_convergence(
    seq: &RealSequence,
    b: &Real,
    horizon: u64,
    sample_floor: &Rational,
    budget: &Budget,
) -> Result<ConvergenceEvidence> {
    if horizon == 0 {
        return Err(Error::InvalidArgument(
            "horizon must be at least 1".to_owned(),
        ));
    }
    let sampling = Budget::min_epsilon(sample_floor.clone());
    let mut terms = Terms::new(seq);
    let mut checks = Vec::new();
    for eps in sampling.schedule(Rational::one()) {
        let center = b.approx(&eps)?.center().clone();
        let (result, from) = scan(&mut terms, &center, &eps, horizon, budget)?;
        checks.push(MemberCheck {
            center,
            radius: eps,
            from,
            to: horizon,
            result,
        });
    }
    let any = |m| checks.iter().any(|c| c.result == m);
    let (verdict, n0) = if any(Membership::No) {
        (Verdict::DivergedAtBudget, None)
    } else if any(Membership::Unknown) {
        (Verdict::Unknown, None)
    } else {
        (Verdict::Converged, checks.iter().map(|c| c.from).max())
    };
    Ok(ConvergenceEvidence {
        verdict,
        n0,
        checks,
    })
}

/// Is `q ± eps` eventually a member of every term, looking at indices up to
/// `horizon`? `Yes` if membership is certified on some tail `n0..=horizon`,
/// `No` if non-membership is certified at `horizon`, `Unknown` otherwise.
pub fn hat_member(
    seq: &RealSequence,
    q: &Rational,
    eps: &Rational,
    horizon: u64,
    budget: &Budget,
) -> Result<Membership> {
    if horizon == 0 {
        return Err(Error::InvalidArgument(
            "horizon must be at least 1".to_owned(),
        ));
    }
    Ok(scan(&mut Terms::new(seq), q, eps, horizon, budget)?.0)
}

/// Terms built so far, shared between scans so each term's answers are
/// computed once.
struct Terms<'a> {
    seq: &'a RealSequence,
    built: HashMap<u64, Real>,
}

impl<'a> Terms<'a> {
    fn new(seq: &'a RealSequence) -> Self {
        Terms {
            seq,
            built: HashMap::new(),
        }
    }

    fn get(&mut self, n: u64) -> &Real {
        self.built.entry(n).or_insert_with(|| self.seq.term(n))
    }
}

/// Verdict at `horizon`, plus the start of the trailing run of `Yes`.
fn scan(
    terms: &mut Terms<'_>,
    q: &Rational,
    eps: &Rational,
    horizon: u64,
    budget: &Budget,
) -> Result<(Membership, u64)> {
    let last = member(q, eps, terms.get(horizon), budget)?;
    if last != Membership::Yes {
        return Ok((last, horizon));
    }
    for n in (1..horizon).rev() {
        if member(q, eps, terms.get(n), budget)? != Membership::Yes {
            return Ok((Membership::Yes, n + 1));
        }
    }
    Ok((Membership::Yes, 1))
}

/// Built-in sequence families, each with a valid modulus.
pub mod families {
    use super::*;

    /// `1/n`, see [`reciprocal_modulus`].
    pub fn reciprocals() -> RealSequence {
        RealSequence::new(|n| Real::embed(Rational::new(BigInt::one(), BigInt::from(n))))
    }

    /// `1 - 1/n`, see [`reciprocal_modulus`].
    pub fn one_minus_reciprocals() -> RealSequence {
        RealSequence::new(|n| {
            Real::embed(Rational::one() - Rational::new(BigInt::one(), BigInt::from(n)))
        })
    }

    /// `N = floor(1/eps) + 1`: for `n, k >= N`, `|1/n - 1/k| < 1/N < eps`.
    pub fn reciprocal_modulus(eps: &Rational) -> Option<u64> {
        u64::try_from(rational::floor(&eps.recip()) + 1).ok()
    }

    /// `(-1)^n`; not Cauchy.
    pub fn alternating() -> RealSequence {
        RealSequence::new(|n| Real::from_integer(if n % 2 == 0 { 1 } else { -1 }))
    }

    /// `Σ_{k=0}^{n} 1/k!`.
    pub fn factorial_sums() -> RealSequence {
        RealSequence::new(|n| Real::embed(factorial_partial_sum(n)))
    }

    pub fn factorial_partial_sum(n: u64) -> Rational {
        // T(j) = Σ_{k<=j} j!/k! satisfies T(j) = j·T(j-1) + 1; the sum is T(n)/n!.
        let mut num = BigInt::one();
        let mut fact = BigInt::one();
        for j in 1..=n {
            num = num * j + 1u32;
            fact *= j;
        }
        Rational::new(num, fact)
    }

    /// Least `N` with `2/(N+1)! <= eps`; the tail past `N` is below that.
    pub fn factorial_modulus(eps: &Rational) -> Option<u64> {
        let mut fact = BigInt::one();
        for n in 0u64.. {
            fact *= n + 1;
            if Rational::new(BigInt::from(2), fact.clone()) <= *eps {
                return Some(n.max(1));
            }
        }
        unreachable!()
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;
    use crate::constructions::e_const;
    use crate::order::distance_bound;
    use crate::rational::{int, rat, ten_to_minus};

    fn equal(a: &Real, b: &Real) -> bool {
        [1, 10, 25].iter().all(|&k| {
            let e = ten_to_minus(k);
            distance_bound(a, b, &e).unwrap() <= e * int(4)
        })
    }

    #[test]
    fn factorial_sums_match_termwise_sum() {
        let mut sum = Rational::one();
        let mut fact = BigInt::one();
        assert_eq!(factorial_partial_sum(0), sum);
        for n in 1..40u64 {
            fact *= n;
            sum += Rational::new(BigInt::one(), fact.clone());
            assert_eq!(factorial_partial_sum(n), sum);
        }
    }

    #[test]
    fn limits_from_moduli() {
        let one = real_of_cauchy(&one_minus_reciprocals(), reciprocal_modulus);
        for k in [1, 5, 15] {
            let e = ten_to_minus(k);
            assert!(distance_bound(&one, &Real::from_integer(1), &e).unwrap() <= e * int(4));
        }
        assert!(matches!(
            one.approx(&ten_to_minus(25)),
            Err(Error::OracleFailure(_))
        ));
        let q = rat(-5, 3);
        let konst = {
            let q = q.clone();
            real_of_cauchy(&RealSequence::new(move |_| Real::embed(q.clone())), |_| {
                Some(1)
            })
        };
        assert!(equal(&konst, &Real::embed(q)));
        let e = real_of_cauchy(&factorial_sums(), factorial_modulus);
        assert!(equal(&e, &e_const()));
    }

    #[test]
    fn reciprocals_converge_to_zero() {
        let ev = check_convergence(
            &reciprocals(),
            &Real::from_integer(0),
            100,
            &rat(1, 64),
            &Budget::decimal(20),
        )
        .unwrap();
        assert_eq!(ev.verdict, Verdict::Converged);
        // The tightest member 0 ± 1/64 needs n > 64.
        assert_eq!(ev.n0, Some(65));
    }

    #[test]
    fn constant_converges_from_one() {
        let seq = RealSequence::new(|_| Real::from_integer(5));
        let ev = check_convergence(
            &seq,
            &Real::from_integer(5),
            20,
            &rat(1, 16),
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(ev.verdict, Verdict::Converged);
        assert_eq!(ev.n0, Some(1));
        assert!(ev.checks.iter().all(|c| c.from == 1));
    }

    #[test]
    fn alternating_diverges() {
        let ev = check_convergence(
            &alternating(),
            &Real::from_integer(0),
            50,
            &rat(1, 8),
            &Budget::decimal(20),
        )
        .unwrap();
        assert_eq!(ev.verdict, Verdict::DivergedAtBudget);
        // 0 ± 1 has ±1 on its boundary.
        assert_eq!(ev.checks[0].result, Membership::Unknown);
        assert_eq!(ev.checks[1].result, Membership::No);
    }

    #[test]
    fn hat_member_examples() {
        let b = Budget::decimal(20);
        assert_eq!(
            hat_member(&reciprocals(), &int(0), &rat(1, 2), 100, &b).unwrap(),
            Membership::Yes
        );
        let naturals = RealSequence::new(|n| Real::from_integer(n as i64));
        assert_eq!(
            hat_member(&naturals, &int(0), &int(1), 100, &b).unwrap(),
            Membership::No
        );
        assert_eq!(
            hat_member(&alternating(), &int(1), &rat(1, 10), 101, &b).unwrap(),
            Membership::No
        );
    }

    #[test]
    fn evidence_json_shape() {
        let seq = RealSequence::new(|_| Real::from_integer(5));
        let ev = check_convergence(
            &seq,
            &Real::from_integer(5),
            3,
            &rat(1, 2),
            &Budget::default(),
        )
        .unwrap();
        let json = serde_json::to_string(&ev).unwrap();
        assert_eq!(
            json,
            r#"{"verdict":"converged","n0":1,"checks":[{"center":"5","radius":"1","from":1,"to":3,"result":"yes"},{"center":"5","radius":"1/2","from":1,"to":3,"result":"yes"}]}"#
        );
    }

    #[test]
    fn zero_horizon_rejected() {
        assert!(hat_member(&reciprocals(), &int(0), &int(1), 0, &Budget::default()).is_err());
    }
}
