//! The expression language: exact rationals, `e`, `liouville`, `sqrt`,
//! the four operations and integer powers.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := "-" factor | power
//! power  := atom ("^" int)?
//! atom   := int "/" posint | int | decimal | "e" | "liouville"
//!         | "sqrt" "(" expr ")" | "(" expr ")"
//! ```
//!
//! `int/posint` written without spaces (and not followed by `^`) is a single
//! rational literal; otherwise `/` is division. Exponents are unsigned
//! integer literals, so `2^-1` is rejected; write `1/2`.

mod eval;
mod parse;
mod sample;

use std::fmt;

use num_traits::{One, Signed};

use crate::rational::Rational;

pub use eval::{eval, eval_budget, to_real, EvalError};
pub use parse::{parse, ParseError};
pub use sample::{random_expr, ExprShape};

/// Byte range `start..end` of the source text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Span {
        Span { start, end }
    }

    pub fn to(self, other: Span) -> Span {
        Span::new(self.start, other.end)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constant {
    E,
    Liouville,
}

impl Constant {
    pub fn name(self) -> &'static str {
        match self {
            Constant::E => "e",
            Constant::Liouville => "liouville",
        }
    }
}

/// A syntax tree node. Equality ignores spans.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Lit(Rational),
    Const(Constant),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Sqrt(Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Expr {
    /// A node with an empty span, for building trees in code.
    pub fn new(kind: ExprKind) -> Expr {
        Expr {
            kind,
            span: Span::default(),
        }
    }

    pub fn lit(q: Rational) -> Expr {
        Expr::new(ExprKind::Lit(q))
    }

    pub fn boxed(self) -> Box<Expr> {
        Box::new(self)
    }

    /// Number of nodes on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        use ExprKind::*;
        match &self.kind {
            Lit(_) | Const(_) => 1,
            Neg(a) | Sqrt(a) | Pow(a, _) => 1 + a.depth(),
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => 1 + a.depth().max(b.depth()),
        }
    }
}

/// Prints fully parenthesized source that parses back to an equal tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ExprKind::*;
        match &self.kind {
            Lit(q) if q.is_negative() => write!(f, "(-{})", -q),
            Lit(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Lit(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Const(c) => f.write_str(c.name()),
            Neg(a) => write!(f, "-{a}"),
            Add(a, b) => write!(f, "({a} + {b})"),
            Sub(a, b) => write!(f, "({a} - {b})"),
            Mul(a, b) => write!(f, "({a} * {b})"),
            Div(a, b) => write!(f, "({a} / {b})"),
            Sqrt(a) => write!(f, "sqrt({a})"),
            Pow(a, n) => match &a.kind {
                Lit(q) if !q.denom().is_one() => write!(f, "({a})^{n}"),
                Neg(_) | Pow(..) => write!(f, "({a})^{n}"),
                _ => write!(f, "{a}^{n}"),
            },
        }
    }
}
