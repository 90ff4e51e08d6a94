use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{Constant, Expr, ExprKind, Span};
use crate::rational::{decimal_to_rational, Rational};

/// First grammar violation. `position` is a byte offset, at most the input
/// length (end of input).
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("expected {expected}, found {found} at byte {position}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Decimal(Rational),
    Ident(String),
    Sym(char),
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    span: Span,
    text: String,
}

impl Token {
    fn found(&self) -> String {
        match self.tok {
            Tok::Eof => "end of input".to_owned(),
            _ => format!("'{}'", self.text),
        }
    }
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let whole = &src[start..i];
            if i < bytes.len() && bytes[i] == b'.' {
                let dot = i;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == dot + 1 {
                    return Err(ParseError {
                        position: i,
                        expected: "digits after '.'".to_owned(),
                        found: describe_at(src, i),
                    });
                }
                Tok::Decimal(decimal_to_rational(whole, &src[dot + 1..i]))
            } else {
                Tok::Int(whole.parse().expect("digits"))
            }
        } else if c.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            Tok::Ident(src[start..i].to_owned())
        } else if b"+-*/^()".contains(&c) {
            i += 1;
            Tok::Sym(c as char)
        } else {
            return Err(ParseError {
                position: start,
                expected: "a number, name, operator or parenthesis".to_owned(),
                found: describe_at(src, start),
            });
        };
        out.push(Token {
            tok,
            span: Span::new(start, i),
            text: src[start..i].to_owned(),
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        span: Span::new(src.len(), src.len()),
        text: String::new(),
    });
    Ok(out)
}

fn describe_at(src: &str, pos: usize) -> String {
    match src[pos..].chars().next() {
        Some(c) => format!("'{c}'"),
        None => "end of input".to_owned(),
    }
}

/// Parses one expression; trailing input is an error.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    p.expect_eof()?;
    Ok(e)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Token {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn error(&self, expected: &str) -> ParseError {
        let t = self.peek();
        ParseError {
            position: t.span.start,
            expected: expected.to_owned(),
            found: t.found(),
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<Token, ParseError> {
        if self.is_sym(c) {
            Ok(self.bump())
        } else {
            Err(self.error(&format!("'{c}'")))
        }
    }

    fn expect_eof(&self) -> Result<(), ParseError> {
        match self.peek().tok {
            Tok::Eof => Ok(()),
            _ => Err(self.error("an operator or end of input")),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let make: fn(Box<Expr>, Box<Expr>) -> ExprKind = if self.is_sym('+') {
                ExprKind::Add
            } else if self.is_sym('-') {
                ExprKind::Sub
            } else {
                return Ok(lhs);
            };
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span.to(rhs.span);
            lhs = Expr {
                kind: make(lhs.boxed(), rhs.boxed()),
                span,
            };
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let make: fn(Box<Expr>, Box<Expr>) -> ExprKind = if self.is_sym('*') {
                ExprKind::Mul
            } else if self.is_sym('/') {
                ExprKind::Div
            } else {
                return Ok(lhs);
            };
            self.bump();
            let rhs = self.factor()?;
            let span = lhs.span.to(rhs.span);
            lhs = Expr {
                kind: make(lhs.boxed(), rhs.boxed()),
                span,
            };
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.is_sym('-') {
            let minus = self.bump();
            let inner = self.factor()?;
            let span = minus.span.to(inner.span);
            return Ok(Expr {
                kind: ExprKind::Neg(inner.boxed()),
                span,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if !self.is_sym('^') {
            return Ok(base);
        }
        self.bump();
        let t = self.peek().clone();
        let n = match &t.tok {
            Tok::Int(n) => n.to_i64().ok_or_else(|| ParseError {
                position: t.span.start,
                expected: "an exponent in machine range".to_owned(),
                found: t.found(),
            })?,
            _ => return Err(self.error("an unsigned integer exponent")),
        };
        self.bump();
        let span = base.span.to(t.span);
        Ok(Expr {
            kind: ExprKind::Pow(base.boxed(), n),
            span,
        })
    }

    /// `p/q` with no spaces, `q != 0`, and no `^` after it.
    fn rational_literal(&self) -> Option<Rational> {
        let (a, slash, b, after) = (
            self.peek(),
            self.peek_at(1),
            self.peek_at(2),
            self.peek_at(3),
        );
        match (&a.tok, &slash.tok, &b.tok) {
            (Tok::Int(p), Tok::Sym('/'), Tok::Int(q))
                if a.span.end == slash.span.start
                    && slash.span.end == b.span.start
                    && !q.is_zero()
                    && after.tok != Tok::Sym('^') =>
            {
                Some(Rational::new(p.clone(), q.clone()))
            }
            _ => None,
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        if let Some(q) = self.rational_literal() {
            let start = self.bump().span;
            self.bump();
            let end = self.bump().span;
            return Ok(Expr {
                kind: ExprKind::Lit(q),
                span: start.to(end),
            });
        }
        let t = self.peek().clone();
        let kind = match &t.tok {
            Tok::Int(n) => ExprKind::Lit(Rational::from_integer(n.clone())),
            Tok::Decimal(q) => ExprKind::Lit(q.clone()),
            Tok::Ident(name) if name == "e" => ExprKind::Const(Constant::E),
            Tok::Ident(name) if name == "liouville" => ExprKind::Const(Constant::Liouville),
            Tok::Ident(name) if name == "sqrt" => {
                self.bump();
                self.expect_sym('(')?;
                let inner = self.expr()?;
                let close = self.expect_sym(')')?;
                return Ok(Expr {
                    kind: ExprKind::Sqrt(inner.boxed()),
                    span: t.span.to(close.span),
                });
            }
            Tok::Sym('(') => {
                self.bump();
                let inner = self.expr()?;
                let close = self.expect_sym(')')?;
                return Ok(Expr {
                    kind: inner.kind,
                    span: t.span.to(close.span),
                });
            }
            _ => return Err(self.error("a number, 'e', 'liouville', 'sqrt' or '('")),
        };
        self.bump();
        Ok(Expr { kind, span: t.span })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn lit(q: Rational) -> Box<Expr> {
        Expr::lit(q).boxed()
    }

    #[test]
    fn sum_with_sqrt() {
        let e = parse("1/3 + sqrt(2)").unwrap();
        let want = Expr::new(ExprKind::Add(
            lit(rat(1, 3)),
            Expr::new(ExprKind::Sqrt(lit(int(2)))).boxed(),
        ));
        assert_eq!(e, want);
        assert_eq!(e.span, Span::new(0, 13));
    }

    #[test]
    fn negative_exponent_rejected_at_minus() {
        let err = parse("2^-1").unwrap_err();
        assert_eq!(err.position, 2);
        assert_eq!(err.found, "'-'");
    }

    #[test]
    fn decimal_is_exact() {
        assert_eq!(parse("3.25").unwrap(), Expr::lit(rat(13, 4)));
        assert_eq!(parse("0.333").unwrap(), Expr::lit(rat(333, 1000)));
    }

    #[test]
    fn literal_versus_division() {
        assert_eq!(parse("1/2").unwrap(), Expr::lit(rat(1, 2)));
        let div = |a, b| Expr::new(ExprKind::Div(lit(int(a)), lit(int(b))));
        assert_eq!(parse("1 / 2").unwrap(), div(1, 2));
        assert_eq!(parse("1/0").unwrap(), div(1, 0));
        let pow = parse("2/3^2").unwrap();
        assert_eq!(
            pow,
            Expr::new(ExprKind::Div(
                lit(int(2)),
                Expr::new(ExprKind::Pow(lit(int(3)), 2)).boxed()
            ))
        );
        let ExprKind::Div(_, zero) = parse("1/0").unwrap().kind else {
            unreachable!()
        };
        assert_eq!(zero.span, Span::new(2, 3));
    }

    #[test]
    fn precedence_and_associativity() {
        let e = parse("1 - 2 - 3").unwrap();
        assert_eq!(e.to_string(), "((1 - 2) - 3)");
        assert_eq!(parse("-2^2").unwrap().to_string(), "-2^2");
        assert_eq!(parse("2 + 3 * 4").unwrap().to_string(), "(2 + (3 * 4))");
        assert_eq!(parse("--e").unwrap().to_string(), "--e");
    }

    #[test]
    fn error_positions() {
        for (src, pos) in [
            ("", 0),
            ("1 +", 3),
            ("(1", 2),
            ("1 2", 2),
            ("sqrt 2", 5),
            ("1 # 2", 2),
            ("1.", 2),
        ] {
            let err = parse(src).unwrap_err();
            assert_eq!(err.position, pos, "{src:?}: {err}");
            assert!(err.position <= src.len());
        }
        assert!(parse("x").is_err());
        assert!(parse("2^99999999999999999999").is_err());
    }
}
