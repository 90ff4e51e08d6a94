use num_bigint::BigInt;
use rand::Rng;

use super::{Constant, Expr, ExprKind};
use crate::rational::Rational;

/// Limits for [`random_expr`].
#[derive(Clone, Debug)]
pub struct ExprShape {
    /// Maximum tree depth, at least 1.
    pub max_depth: usize,
    /// Literals are `±p/q` with `|p/q| <= lit_bound`.
    pub lit_bound: i64,
    pub max_denominator: i64,
    /// Allow `e`, `liouville` and `sqrt` of positive literals.
    pub irrationals: bool,
}

impl Default for ExprShape {
    fn default() -> Self {
        ExprShape {
            max_depth: 5,
            lit_bound: 100,
            max_denominator: 20,
            irrationals: true,
        }
    }
}

/// A random tree within `shape` whose evaluation never needs a sign that is
/// not certifiable: divisors and `sqrt` arguments are positive literals.
/// Negative values appear as `Neg` of a literal, so `to_string` reparses to
/// an equal tree.
pub fn random_expr<R: Rng + ?Sized>(rng: &mut R, shape: &ExprShape) -> Expr {
    node(rng, shape, shape.max_depth.max(1))
}

fn node<R: Rng + ?Sized>(rng: &mut R, shape: &ExprShape, depth: usize) -> Expr {
    if depth == 1 {
        return literal(rng, shape, 0);
    }
    if rng.gen_ratio(1, 4) {
        return leaf(rng, shape);
    }
    let sub = |rng: &mut R| node(rng, shape, depth - 1).boxed();
    let kind = match rng.gen_range(0..6) {
        0 => ExprKind::Add(sub(rng), sub(rng)),
        1 => ExprKind::Sub(sub(rng), sub(rng)),
        2 => ExprKind::Mul(sub(rng), sub(rng)),
        3 => ExprKind::Neg(sub(rng)),
        4 => ExprKind::Div(sub(rng), positive_lit(rng, shape).boxed()),
        _ => ExprKind::Pow(sub(rng), rng.gen_range(0..=3)),
    };
    Expr::new(kind)
}

/// Depth at most 2.
fn leaf<R: Rng + ?Sized>(rng: &mut R, shape: &ExprShape) -> Expr {
    if shape.irrationals && rng.gen_ratio(1, 4) {
        return Expr::new(match rng.gen_range(0..3) {
            0 => ExprKind::Const(Constant::E),
            1 => ExprKind::Const(Constant::Liouville),
            _ => ExprKind::Sqrt(positive_lit(rng, shape).boxed()),
        });
    }
    let lit = literal(rng, shape, 0);
    if rng.gen_bool(0.5) {
        Expr::new(ExprKind::Neg(lit.boxed()))
    } else {
        lit
    }
}

fn positive_lit<R: Rng + ?Sized>(rng: &mut R, shape: &ExprShape) -> Expr {
    literal(rng, shape, 1)
}

/// `p/q` in `[0, lit_bound]` with `p >= min_numerator`.
fn literal<R: Rng + ?Sized>(rng: &mut R, shape: &ExprShape, min_numerator: i64) -> Expr {
    let q = rng.gen_range(1..=shape.max_denominator.max(1));
    let p = rng.gen_range(min_numerator..=shape.lit_bound * q);
    Expr::lit(Rational::new(BigInt::from(p), BigInt::from(q)))
}
