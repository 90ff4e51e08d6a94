use std::fmt;

use exact_real::expr::{EvalError, ParseError, Span};
use exact_real::Error;

/// A failed command with its message and exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Parse { src: String, err: ParseError },
    SignUnknown { src: String, span: Span },
    Real(Error),
}

impl Failure {
    pub fn usage(msg: String) -> Failure {
        Failure::Usage(msg)
    }

    pub fn parse(src: &str, err: ParseError) -> Failure {
        Failure::Parse {
            src: src.to_owned(),
            err,
        }
    }

    pub fn eval(src: &str, err: EvalError) -> Failure {
        match err {
            EvalError::SignUnknown { span } => Failure::SignUnknown {
                src: src.to_owned(),
                span,
            },
            EvalError::Real(e) => e.into(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Parse { .. } => 1,
            Failure::SignUnknown { .. } | Failure::Real(Error::SignUnknown) => 2,
            Failure::Real(Error::Invariant(_) | Error::OracleFailure(_)) => 4,
            Failure::Real(_) => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Real(e)
    }
}

/// `src` on one line and carets under `start..end` on the next.
fn underline(f: &mut fmt::Formatter<'_>, src: &str, start: usize, end: usize) -> fmt::Result {
    let pad = src[..start].chars().count();
    let width = src[start..end].chars().count().max(1);
    writeln!(f, "  {src}")?;
    write!(f, "  {}{}", " ".repeat(pad), "^".repeat(width))
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "error: {msg}"),
            Failure::Parse { src, err } => {
                writeln!(f, "error: {err}")?;
                underline(f, src, err.position, err.position)
            }
            Failure::SignUnknown { src, span } => {
                writeln!(
                    f,
                    "error: sign of `{}` not certified within the budget",
                    &src[span.start..span.end]
                )?;
                underline(f, src, span.start, span.end)
            }
            Failure::Real(Error::Invariant(msg)) => write!(f, "internal invariant violated: {msg}"),
            Failure::Real(e) => write!(f, "error: {e}"),
        }
    }
}
