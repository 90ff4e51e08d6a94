//! Exact real arithmetic. A real is an oracle answering each rational
//! precision `eps > 0` with an open rational interval of radius `<= eps`; the
//! answers pairwise intersect. Order is semi-decidable and every comparison
//! takes an explicit [`Budget`].
//!
//! ```
//! use exact_real::{compare, sqrt_pos, to_decimal, Budget, Real};
//!
//! let budget = Budget::decimal(40);
//! let two = Real::from_integer(2);
//! let root = sqrt_pos(&two, &budget).unwrap();
//! assert_eq!(to_decimal(&root, 6, &budget).unwrap().to_string(), "1.414214");
//! assert!(compare(&root, &Real::embed(exact_real::rat(3, 2)), &budget).unwrap().is_less());
//! ```

pub mod constructions;
pub mod decimal;
pub mod error;
pub mod expr;
pub mod interval;
pub mod order;
pub mod rational;
pub mod real;
pub mod sequences;

pub use constructions::*;
pub use decimal::{parse_decimal, to_decimal, Decimal};
pub use error::{Error, Result};
pub use interval::Interval;
pub use order::{
    archimedean_bound, compare, distance_bound, member, rational_between, Budget, Comparison,
    Membership,
};
pub use rational::{int, parse_rational, rat, Rational, RationalArg};
pub use real::{Oracle, Real};
pub use sequences::{
    check_convergence, hat_member, real_of_cauchy, ConvergenceEvidence, MemberCheck, RealSequence,
    Verdict,
};
