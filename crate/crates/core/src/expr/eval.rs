use super::{Constant, Expr, ExprKind, Span};
use crate::constructions::{e_const, liouville, sqrt_pos};
use crate::decimal::{to_decimal, Decimal};
use crate::error::Error;
use crate::order::Budget;
use crate::rational;
use crate::real::Real;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum EvalError {
    /// A divisor, negative-power base or `sqrt` argument whose sign could not
    /// be certified within the budget. `span` locates it in the source.
    #[error("sign of subexpression at bytes {}..{} could not be certified", span.start, span.end)]
    SignUnknown { span: Span },
    #[error(transparent)]
    Real(#[from] Error),
}

/// `min_epsilon = 10^-(digits+10)`.
pub fn eval_budget(digits: u32) -> Budget {
    Budget::min_epsilon(rational::ten_to_minus(digits + 10))
}

/// Builds the real denoted by `expr`. Sign obligations are discharged with
/// `budget` as the tree is built.
pub fn to_real(expr: &Expr, budget: &Budget) -> Result<Real, EvalError> {
    use ExprKind::*;
    let at = |span: Span| {
        move |e: Error| match e {
            Error::SignUnknown => EvalError::SignUnknown { span },
            other => EvalError::Real(other),
        }
    };
    Ok(match &expr.kind {
        Lit(q) => Real::embed(q.clone()),
        Const(Constant::E) => e_const(),
        Const(Constant::Liouville) => liouville(),
        Neg(a) => to_real(a, budget)?.neg(),
        Add(a, b) => to_real(a, budget)?.add(&to_real(b, budget)?),
        Sub(a, b) => to_real(a, budget)?.sub(&to_real(b, budget)?),
        Mul(a, b) => to_real(a, budget)?.mul(&to_real(b, budget)?),
        Div(a, b) => {
            let num = to_real(a, budget)?;
            let den = to_real(b, budget)?.recip(budget).map_err(at(b.span))?;
            num.mul(&den)
        }
        Sqrt(a) => sqrt_pos(&to_real(a, budget)?, budget).map_err(at(a.span))?,
        Pow(a, n) => to_real(a, budget)?.powi(*n, budget).map_err(at(a.span))?,
    })
}

/// Evaluates `expr` to `digits` places; the returned [`Decimal`] carries the
/// interval that certifies its digits.
pub fn eval(expr: &Expr, digits: u32, budget: &Budget) -> Result<Decimal, EvalError> {
    let real = to_real(expr, budget)?;
    Ok(to_decimal(&real, digits, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn run(src: &str, digits: u32) -> Result<Decimal, EvalError> {
        eval(&parse(src).unwrap(), digits, &eval_budget(digits))
    }

    #[test]
    fn one_third() {
        assert_eq!(run("1/3", 3).unwrap().to_string(), "0.333");
        assert_eq!(run("1 / 3", 3).unwrap().to_string(), "0.333");
    }

    #[test]
    fn sqrt_identity_prints_zero() {
        let d = run("sqrt(2)*sqrt(2) - 2", 10).unwrap();
        assert_eq!(d.to_string(), "0.0000000000");
    }

    #[test]
    fn zero_divisor_reports_its_span() {
        let src = "1/0";
        let EvalError::SignUnknown { span } = run(src, 5).unwrap_err() else {
            panic!("expected SignUnknown");
        };
        assert_eq!(&src[span.start..span.end], "0");
        let src = "1 + 1/(3 - 3)";
        let EvalError::SignUnknown { span } = run(src, 5).unwrap_err() else {
            panic!("expected SignUnknown");
        };
        assert_eq!(&src[span.start..span.end], "(3 - 3)");
    }

    #[test]
    fn sqrt_of_negative() {
        assert!(matches!(
            run("sqrt(-1)", 3),
            Err(EvalError::SignUnknown { .. })
        ));
    }

    #[test]
    fn powers_and_constants() {
        assert_eq!(run("(2/3)^3", 6).unwrap().to_string(), "0.296296");
        assert_eq!(run("2^10", 0).unwrap().to_string(), "1024");
        assert_eq!(run("-2^2", 1).unwrap().to_string(), "-4.0");
        let d = run("e", 10).unwrap();
        assert!(["2.7182818284", "2.7182818285"].contains(&d.digits.as_str()));
        assert_eq!(run("liouville", 7).unwrap().to_string(), "0.2100010");
    }
}
