//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes and returns plain strings; results are JSON objects with
//! either the payload fields or `error` (and, for sign failures, the byte span
//! of the offending subexpression).

use exact_real::expr::{self, eval_budget, to_real, EvalError};
use exact_real::{
    compare, diagonalize, Budget, Comparison, Interval, Rational, Real, RealSequence,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct ErrorReply {
    error: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    span: Option<[usize; 2]>,
}

fn fail(error: impl ToString, span: Option<[usize; 2]>) -> ErrorReply {
    ErrorReply {
        error: error.to_string(),
        span,
    }
}

fn respond<T: Serialize>(reply: Result<T, ErrorReply>) -> String {
    match reply {
        Ok(v) => serde_json::to_string(&v),
        Err(e) => serde_json::to_string(&e),
    }
    .expect("serializable")
}

fn real_of(src: &str, budget: &Budget) -> Result<Real, ErrorReply> {
    let tree = expr::parse(src).map_err(|e| fail(&e, Some([e.position, e.position])))?;
    to_real(&tree, budget).map_err(|e| match e {
        EvalError::SignUnknown { span } => fail(&e, Some([span.start, span.end])),
        other => fail(other, None),
    })
}

#[derive(Serialize)]
pub struct Evaluation {
    decimal: String,
    center: String,
    radius: String,
}

pub fn evaluate_json(src: &str, digits: u32) -> String {
    let digits = digits.min(200);
    let budget = eval_budget(digits);
    let reply = real_of(src, &budget).and_then(|a| {
        let d = exact_real::to_decimal(&a, digits, &budget).map_err(|e| fail(e, None))?;
        Ok(Evaluation {
            decimal: d.to_string(),
            center: d.interval.center().to_string(),
            radius: d.interval.radius().to_string(),
        })
    });
    respond(reply)
}

#[derive(Serialize)]
pub struct Verdict {
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    gap_bound: Option<String>,
}

/// Compares with budget floor `10^-floor_digits`.
pub fn compare_json(left: &str, right: &str, floor_digits: u32) -> String {
    let budget = Budget::decimal(floor_digits.min(400));
    let reply = real_of(left, &budget).and_then(|a| {
        let b = real_of(right, &budget)?;
        Ok(match compare(&a, &b, &budget).map_err(|e| fail(e, None))? {
            Comparison::Less { .. } => Verdict {
                verdict: "less",
                gap_bound: None,
            },
            Comparison::Greater { .. } => Verdict {
                verdict: "greater",
                gap_bound: None,
            },
            Comparison::Indeterminate { gap_bound } => Verdict {
                verdict: "indeterminate",
                gap_bound: Some(gap_bound.to_string()),
            },
        })
    });
    respond(reply)
}

#[derive(Serialize)]
pub struct Trap {
    index: u64,
    term: String,
    lo: f64,
    hi: f64,
    avoided_lo: f64,
    avoided_hi: f64,
}

fn approx_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Diagonalizes against the given expressions (one per line, cycled) from
/// `0 ± 1`. Endpoints are rounded to `f64` for drawing only.
pub fn diagonal_json(terms: &str, count: u32) -> String {
    let budget = Budget::default();
    let sources: Vec<&str> = terms
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    if sources.is_empty() {
        return respond::<()>(Err(fail("no terms given", None)));
    }
    let reals = match sources
        .iter()
        .map(|s| real_of(s, &budget))
        .collect::<Result<Vec<_>, _>>()
    {
        Ok(r) => r,
        Err(e) => return respond::<()>(Err(e)),
    };
    let n_terms = reals.len();
    let seq = RealSequence::new(move |n| reals[(n - 1) as usize % n_terms].clone());
    let i0 = Interval::new(
        Rational::from_integer(0.into()),
        Rational::from_integer(1.into()),
    )
    .expect("positive radius");
    let (_, diag) = diagonalize(&seq, i0);
    let reply = diag
        .certificates(u64::from(count.min(40)))
        .map(|certs| {
            certs
                .into_iter()
                .map(|c| Trap {
                    index: c.index,
                    term: sources[(c.index - 1) as usize % n_terms].to_owned(),
                    lo: approx_f64(&c.trap.lo()),
                    hi: approx_f64(&c.trap.hi()),
                    avoided_lo: approx_f64(&c.avoided.lo()),
                    avoided_hi: approx_f64(&c.avoided.hi()),
                })
                .collect::<Vec<_>>()
        })
        .map_err(|e| fail(e, None));
    respond(reply)
}

#[wasm_bindgen]
pub fn evaluate(src: &str, digits: u32) -> String {
    evaluate_json(src, digits)
}

#[wasm_bindgen(js_name = compareExprs)]
pub fn compare_exprs(left: &str, right: &str, floor_digits: u32) -> String {
    compare_json(left, right, floor_digits)
}

#[wasm_bindgen(js_name = diagonalTraps)]
pub fn diagonal_traps(terms: &str, count: u32) -> String {
    diagonal_json(terms, count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluate_replies() {
        assert_eq!(
            evaluate_json("1/3", 3),
            r#"{"decimal":"0.333","center":"1/3","radius":"1/100000"}"#
        );
        assert_eq!(
            evaluate_json("1 + 1/(2 - 2)", 3),
            r#"{"error":"sign of subexpression at bytes 6..13 could not be certified","span":[6,13]}"#
        );
        assert!(evaluate_json("2^-1", 3).contains(r#""span":[2,2]"#));
    }

    #[test]
    fn compare_replies() {
        assert_eq!(compare_json("sqrt(2)", "3/2", 40), r#"{"verdict":"less"}"#);
        assert_eq!(
            compare_json("1/3", "1/3", 3),
            r#"{"verdict":"indeterminate","gap_bound":"1/128"}"#
        );
    }

    #[test]
    fn traps_nest() {
        let json = diagonal_json("0\nsqrt(2) - 1\ne - 3", 12);
        let traps: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
        assert_eq!(traps.len(), 12);
        let mut prev = (-1.0, 1.0);
        for t in &traps {
            let (lo, hi) = (t["lo"].as_f64().unwrap(), t["hi"].as_f64().unwrap());
            assert!(prev.0 <= lo && hi <= prev.1);
            prev = (lo, hi);
        }
        assert!(diagonal_json("", 3).contains("error"));
    }
}
