use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::{self, Rational};
use crate::real::{Oracle, Real};
use crate::sequences::RealSequence;

/// Evidence that the diagonal real differs from term `index`: the trap
/// `I_n` (an answer of the diagonal real) is disjoint from `A_n` (an answer of
/// the term).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagCertificate {
    pub index: u64,
    pub trap: Interval,
    pub avoided: Interval,
}

/// Handle on the lazily built traps of a diagonal real.
#[derive(Clone)]
pub struct Diagonal {
    state: Arc<State>,
}

struct State {
    seq: RealSequence,
    initial: Interval,
    certificates: Mutex<Vec<DiagCertificate>>,
}

/// Builds a real differing from every term of `seq`, starting inside `initial`.
///
/// Step `n` asks term `n` for an answer `A_n` at a tenth of the radius of
/// `I_{n-1}`, so `A_n` is at most half as long as one fifth of `I_{n-1}`. It
/// cannot meet all three middle fifths; the leftmost one it misses becomes
/// `I_n`. Traps are nested with
/// a positive margin, and the diagonal real answers precision `eps` with the
/// first trap of radius `<= eps`.
pub fn diagonalize(seq: &RealSequence, initial: Interval) -> (Real, Diagonal) {
    let diagonal = Diagonal {
        state: Arc::new(State {
            seq: seq.clone(),
            initial,
            certificates: Mutex::new(Vec::new()),
        }),
    };
    let real = Real::from_oracle(DiagonalOracle(diagonal.clone()));
    (real, diagonal)
}

impl Diagonal {
    pub fn initial(&self) -> &Interval {
        &self.state.initial
    }

    /// `I_n`; `I_0` is the initial interval.
    pub fn trap(&self, n: u64) -> Result<Interval> {
        if n == 0 {
            return Ok(self.state.initial.clone());
        }
        Ok(self.certificate(n)?.trap)
    }

    /// Certificate for term `n >= 1`, extending the traps as needed.
    pub fn certificate(&self, n: u64) -> Result<DiagCertificate> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "sequence indices start at 1".to_owned(),
            ));
        }
        loop {
            let (len, last) = {
                let certs = self.lock();
                if let Some(c) = certs.get(n as usize - 1) {
                    return Ok(c.clone());
                }
                let last = certs
                    .last()
                    .map_or_else(|| self.state.initial.clone(), |c| c.trap.clone());
                (certs.len(), last)
            };
            // Extend outside the lock; only the first writer for an index wins.
            let next = self.step(len as u64 + 1, &last)?;
            let mut certs = self.lock();
            if certs.len() == len {
                certs.push(next);
            }
        }
    }

    pub fn certificates(&self, count: u64) -> Result<Vec<DiagCertificate>> {
        (1..=count).map(|n| self.certificate(n)).collect()
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, Vec<DiagCertificate>> {
        self.state
            .certificates
            .lock()
            .unwrap_or_else(|p| p.into_inner())
    }

    fn step(&self, index: u64, previous: &Interval) -> Result<DiagCertificate> {
        let avoided = self
            .state
            .seq
            .term(index)
            .approx(&(previous.radius() / rational::int(10)))?;
        let fifths = previous.fifths();
        let trap = fifths[1..4]
            .iter()
            .find(|f| !f.intersects(&avoided))
            .cloned()
            .ok_or_else(|| {
                Error::Invariant(format!(
                    "answer {avoided} meets all middle fifths of {previous}"
                ))
            })?;
        Ok(DiagCertificate {
            index,
            trap,
            avoided,
        })
    }
}

struct DiagonalOracle(Diagonal);

impl Oracle for DiagonalOracle {
    fn approx(&self, eps: &Rational) -> Result<Interval> {
        let five = rational::int(5);
        let mut radius = self.0.initial().radius().clone();
        let mut n = 0;
        while &radius > eps {
            radius /= &five;
            n += 1;
        }
        self.0.trap(n)
    }

    fn describe(&self) -> String {
        format!("diagonal(from {})", self.0.initial())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{compare, Budget};
    use crate::rational::{int, rat};

    fn constant_zero() -> RealSequence {
        RealSequence::new(|_| Real::from_integer(0))
    }

    #[test]
    fn first_trap_for_constant_zero() {
        let (_, diag) = diagonalize(&constant_zero(), Interval::new(int(0), int(1)).unwrap());
        let c = diag.certificate(1).unwrap();
        assert_eq!(c.avoided, Interval::new(int(0), rat(1, 10)).unwrap());
        assert_eq!(c.trap, Interval::new(rat(-2, 5), rat(1, 5)).unwrap());
    }

    #[test]
    fn traps_nest_and_avoid() {
        let seq = RealSequence::new(|n| Real::embed(rat(n as i64 % 7 - 3, 5)));
        let i0 = Interval::new(int(0), int(1)).unwrap();
        let (_, diag) = diagonalize(&seq, i0.clone());
        let mut prev = i0;
        for (k, c) in diag.certificates(30).unwrap().into_iter().enumerate() {
            assert_eq!(c.index, k as u64 + 1);
            assert!(!c.trap.intersects(&c.avoided));
            assert!(c.trap.is_deep_subset_of(&prev));
            assert_eq!(c.trap.length() * int(5), prev.length());
            prev = c.trap;
        }
    }

    #[test]
    fn diagonal_separates_from_zero() {
        let (real, _) = diagonalize(&constant_zero(), Interval::new(int(0), int(1)).unwrap());
        let c = compare(&real, &Real::from_integer(0), &Budget::decimal(10)).unwrap();
        assert!(c.is_less(), "{c:?}");
    }

    #[test]
    fn oracle_returns_first_small_trap() {
        let (real, diag) = diagonalize(&constant_zero(), Interval::new(int(0), int(1)).unwrap());
        assert_eq!(real.approx(&int(1)).unwrap(), diag.trap(0).unwrap());
        assert_eq!(real.approx(&rat(1, 5)).unwrap(), diag.trap(1).unwrap());
        assert_eq!(real.approx(&rat(1, 6)).unwrap(), diag.trap(2).unwrap());
    }
}
