//! Recursive-descent parser for gamma-matrix expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := RATIONAL | 'g(' IDX (',' IDX){0,2} ')' | 'g5'
//!         | 'eta(' IDX ',' IDX ')' | 'eps(' IDX ',' IDX ',' IDX ',' IDX ')'
//!         | '-' factor | '(' expr ')'
//! RATIONAL := INT ('/' POSINT)?
//! ```

use std::fmt;

use thiserror::Error;

use super::Expr;
use crate::algebra::{Rational, TetradIndex};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at offset {offset}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Expected { expected: String, found: Found },
    IndexOutOfRange(u64),
    GeneratorArity(usize),
    UnknownName(String),
    NumberTooLarge,
    ZeroDenominator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Found {
    End,
    Char(char),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Expected { expected, found: Found::End } => {
                write!(f, "syntax error: expected {expected}, found end of input")
            }
            ParseErrorKind::Expected { expected, found: Found::Char(c) } => {
                write!(f, "syntax error: expected {expected}, found `{c}`")
            }
            ParseErrorKind::IndexOutOfRange(v) => write!(f, "index {v} is outside 0..=3"),
            ParseErrorKind::GeneratorArity(n) => {
                write!(f, "g(...) takes 1 to 3 indices, got {n}")
            }
            ParseErrorKind::UnknownName(name) => write!(f, "unknown name `{name}`"),
            ParseErrorKind::NumberTooLarge => write!(f, "number too large"),
            ParseErrorKind::ZeroDenominator => write!(f, "zero denominator"),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: input.as_bytes(), pos: 0 };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.expected("an operator or end of input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn found(&self) -> Found {
        match std::str::from_utf8(&self.src[self.pos..]).ok().and_then(|s| s.chars().next()) {
            Some(c) => Found::Char(c),
            None if self.pos >= self.src.len() => Found::End,
            None => Found::Char(char::REPLACEMENT_CHARACTER),
        }
    }

    fn expected(&self, what: &str) -> ParseError {
        ParseError {
            offset: self.pos,
            kind: ParseErrorKind::Expected {
                expected: what.to_string(),
                found: self.found(),
            },
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.expected(&format!("`{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Sum(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Difference(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.eat(b'*') {
            lhs = Expr::Product(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(Expr::Group(Box::new(inner)))
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(c) if c.is_ascii_alphabetic() => self.named(),
            _ => Err(self.expected("a number, `g(`, `g5`, `eta(`, `eps(`, `-` or `(`")),
        }
    }

    fn integer(&mut self) -> Result<(u64, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.expected("an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse::<u64>()
            .map(|v| (v, start))
            .map_err(|_| ParseError { offset: start, kind: ParseErrorKind::NumberTooLarge })
    }

    fn rational(&mut self) -> Result<Expr, ParseError> {
        let (num, start) = self.integer()?;
        let num = i64::try_from(num).map_err(|_| ParseError { offset: start, kind: ParseErrorKind::NumberTooLarge })?;
        if !self.eat(b'/') {
            return Ok(Expr::Rational(Rational::from_integer(num)));
        }
        let (den, den_start) = self.integer()?;
        if den == 0 {
            return Err(ParseError { offset: den_start, kind: ParseErrorKind::ZeroDenominator });
        }
        let den = i64::try_from(den).map_err(|_| ParseError { offset: den_start, kind: ParseErrorKind::NumberTooLarge })?;
        Ok(Expr::Rational(Rational::new(num, den)))
    }

    fn index(&mut self) -> Result<TetradIndex, ParseError> {
        let (value, start) = self.integer()?;
        u8::try_from(value)
            .ok()
            .and_then(|v| TetradIndex::new(v).ok())
            .ok_or(ParseError { offset: start, kind: ParseErrorKind::IndexOutOfRange(value) })
    }

    fn index_list(&mut self) -> Result<Vec<TetradIndex>, ParseError> {
        self.expect(b'(')?;
        let mut out = vec![self.index()?];
        while self.eat(b',') {
            out.push(self.index()?);
        }
        self.expect(b')')?;
        Ok(out)
    }

    fn named(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        match name {
            "g5" => Ok(Expr::Gamma5),
            "g" => {
                let idx = self.index_list()?;
                if idx.len() > 3 {
                    return Err(ParseError { offset: start, kind: ParseErrorKind::GeneratorArity(idx.len()) });
                }
                Ok(Expr::Generator(idx))
            }
            "eta" => {
                let idx = self.index_list()?;
                match idx[..] {
                    [a, b] => Ok(Expr::Eta(a, b)),
                    _ => Err(ParseError {
                        offset: start,
                        kind: ParseErrorKind::Expected {
                            expected: "exactly 2 indices for eta".to_string(),
                            found: Found::Char('('),
                        },
                    }),
                }
            }
            "eps" => {
                let idx = self.index_list()?;
                match idx[..] {
                    [a, b, c, d] => Ok(Expr::Epsilon([a, b, c, d])),
                    _ => Err(ParseError {
                        offset: start,
                        kind: ParseErrorKind::Expected {
                            expected: "exactly 4 indices for eps".to_string(),
                            found: Found::Char('('),
                        },
                    }),
                }
            }
            other => Err(ParseError { offset: start, kind: ParseErrorKind::UnknownName(other.to_string()) }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::index::indices;

    fn g(values: &[u8]) -> Expr {
        Expr::Generator(values.iter().map(|&v| TetradIndex::new(v).unwrap()).collect())
    }

    #[test]
    fn product_of_generators() {
        let e = parse("g(0)*g(1)").unwrap();
        assert_eq!(e, Expr::Product(Box::new(g(&[0])), Box::new(g(&[1]))));
    }

    #[test]
    fn bivector_definition() {
        let e = parse("1/2*(g(0)*g(1)-g(1)*g(0))").unwrap();
        let diff = Expr::Difference(
            Box::new(Expr::Product(Box::new(g(&[0])), Box::new(g(&[1])))),
            Box::new(Expr::Product(Box::new(g(&[1])), Box::new(g(&[0])))),
        );
        let expected = Expr::Product(
            Box::new(Expr::Rational(Rational::new(1, 2))),
            Box::new(Expr::Group(Box::new(diff))),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(parse(" g ( 0 , 1 ) * g5 ").unwrap(), parse("g(0,1)*g5").unwrap());
        assert_eq!(parse("3 / 4").unwrap(), Expr::Rational(Rational::new(3, 4)));
    }

    #[test]
    fn eta_and_eps() {
        let [a, b, c, d] = indices([0, 1, 2, 3]);
        assert_eq!(parse("eta(0,1)").unwrap(), Expr::Eta(a, b));
        assert_eq!(parse("eps(0,1,2,3)").unwrap(), Expr::Epsilon([a, b, c, d]));
        assert!(parse("eta(0)").is_err());
        assert!(parse("eps(0,1,2)").is_err());
    }

    #[test]
    fn precedence_and_unary_minus() {
        // -a*b + c parses as ((-a) * b) + c
        let e = parse("-g(0)*g(1)+g5").unwrap();
        let expected = Expr::Sum(
            Box::new(Expr::Product(Box::new(Expr::Neg(Box::new(g(&[0])))), Box::new(g(&[1])))),
            Box::new(Expr::Gamma5),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn arity_error() {
        let err = parse("g(0,1,2,3)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::GeneratorArity(4));
        assert_eq!(err.offset, 0);
    }

    #[test]
    fn dangling_operator_reports_offset() {
        let err = parse("g(0)*").unwrap_err();
        assert_eq!(err.offset, 5);
        assert!(matches!(err.kind, ParseErrorKind::Expected { found: Found::End, .. }));
        assert_eq!(
            err.to_string(),
            "syntax error: expected a number, `g(`, `g5`, `eta(`, `eps(`, `-` or `(`, found end of input at offset 5"
        );
    }

    #[test]
    fn index_range_error() {
        let err = parse("g(0, 4)").unwrap_err();
        assert_eq!(err, ParseError { offset: 5, kind: ParseErrorKind::IndexOutOfRange(4) });
    }

    #[test]
    fn other_errors() {
        assert_eq!(parse("1/0").unwrap_err().kind, ParseErrorKind::ZeroDenominator);
        assert_eq!(parse("gamma(0)").unwrap_err().kind, ParseErrorKind::UnknownName("gamma".into()));
        assert_eq!(parse("99999999999999999999").unwrap_err().kind, ParseErrorKind::NumberTooLarge);
        assert_eq!(parse("g()").unwrap_err().offset, 2);
        assert_eq!(parse("(g(0)").unwrap_err().offset, 5);
        assert_eq!(parse("g(0) g(1)").unwrap_err().offset, 5);
        assert_eq!(parse("").unwrap_err().offset, 0);
    }
}
