//! Expressions over concrete indices: parsing, evaluation and rendering.

mod parser;
mod render;

use thiserror::Error;

use crate::algebra::{epsilon_symbol, metric_component, Blade, Multivector, Rational, TetradIndex};
use crate::engine::Engine;
use crate::oracle::{ExactComplexMatrix, OracleError, Representation};

pub use parser::{parse, Found, ParseError, ParseErrorKind};
pub use render::{render, RenderFormat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(Rational),
    /// `g(i)`, `g(i,j)` or `g(i,j,k)`: the antisymmetrized generator.
    Generator(Vec<TetradIndex>),
    Gamma5,
    Eta(TetradIndex, TetradIndex),
    /// Lower-index alternating symbol.
    Epsilon([TetradIndex; 4]),
    Neg(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Group(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("coefficient overflow during evaluation")]
    Overflow,
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SimplifyError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Reduces an expression to canonical form with the symbolic engine.
pub fn evaluate(expr: &Expr) -> Result<Multivector, EvalError> {
    evaluate_with(Engine::global(), expr)
}

pub fn evaluate_with(engine: &Engine, expr: &Expr) -> Result<Multivector, EvalError> {
    let rec = |e: &Expr| evaluate_with(engine, e);
    Ok(match expr {
        Expr::Rational(r) => Multivector::scalar(*r),
        Expr::Generator(idx) => Multivector::generator(idx).expect("parser limits arity to 1..=3"),
        Expr::Gamma5 => Multivector::pseudoscalar(),
        Expr::Eta(a, b) => Multivector::scalar(Rational::from_integer(i64::from(metric_component(*a, *b)))),
        Expr::Epsilon(idx) => Multivector::scalar(Rational::from_integer(i64::from(epsilon_symbol(*idx)))),
        Expr::Neg(inner) => rec(inner)?.checked_scale(Rational::from_integer(-1)).ok_or(EvalError::Overflow)?,
        Expr::Group(inner) => rec(inner)?,
        Expr::Sum(a, b) => rec(a)?.checked_add(&rec(b)?).ok_or(EvalError::Overflow)?,
        Expr::Difference(a, b) => {
            let negated = rec(b)?.checked_scale(Rational::from_integer(-1)).ok_or(EvalError::Overflow)?;
            rec(a)?.checked_add(&negated).ok_or(EvalError::Overflow)?
        }
        Expr::Product(a, b) => engine.checked_mv_product(&rec(a)?, &rec(b)?).ok_or(EvalError::Overflow)?,
    })
}

/// Evaluates the expression with explicit matrices, bypassing the engine.
pub fn evaluate_matrix(expr: &Expr, rep: &Representation) -> Result<ExactComplexMatrix, EvalError> {
    let rec = |e: &Expr| evaluate_matrix(e, rep);
    let scalar = |v: i64| ExactComplexMatrix::identity().scale_rational(Rational::from_integer(v));
    Ok(match expr {
        Expr::Rational(r) => ExactComplexMatrix::identity().scale_rational(*r),
        Expr::Generator(idx) => rep.antisymmetrized(idx)?,
        Expr::Gamma5 => rep.blade_matrix(Blade::PSEUDOSCALAR).clone(),
        Expr::Eta(a, b) => scalar(i64::from(metric_component(*a, *b))),
        Expr::Epsilon(idx) => scalar(i64::from(epsilon_symbol(*idx))),
        Expr::Neg(inner) => -rec(inner)?,
        Expr::Group(inner) => rec(inner)?,
        Expr::Sum(a, b) => &rec(a)? + &rec(b)?,
        Expr::Difference(a, b) => &rec(a)? - &rec(b)?,
        Expr::Product(a, b) => &rec(a)? * &rec(b)?,
    })
}

/// [`evaluate_matrix`] followed by trace projection onto the blades.
pub fn evaluate_oracle(expr: &Expr, rep: &Representation) -> Result<Multivector, EvalError> {
    Ok(rep.decompose(&evaluate_matrix(expr, rep)?)?)
}

/// Parse, evaluate and render in one step.
pub fn simplify(input: &str, format: RenderFormat) -> Result<String, SimplifyError> {
    let expr = parse(input)?;
    Ok(render(&evaluate(&expr)?, format))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(s: &str) -> Multivector {
        evaluate(&parse(s).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(eval("g(0)*g(0)"), Multivector::one());
        assert_eq!(eval("g5*g5"), Multivector::scalar(Rational::from_integer(-1)));
        assert_eq!(eval("g(0)*g(1)*g(2)*g(3)"), Multivector::pseudoscalar());
        assert_eq!(eval("g(0)*g(0,1)"), eval("g(1)"));
    }

    #[test]
    fn bracket_definition_matches_generator() {
        assert_eq!(eval("1/2*(g(0)*g(1)-g(1)*g(0))"), eval("g(0,1)"));
        assert_eq!(eval("g(1,0)"), eval("-g(0,1)"));
        assert!(eval("g(2,2)").is_zero());
    }

    #[test]
    fn scalars() {
        assert_eq!(eval("eta(1,1)"), Multivector::scalar(Rational::from_integer(-1)));
        assert_eq!(eval("eps(1,0,2,3)*2/3"), Multivector::scalar(Rational::new(-2, 3)));
    }

    #[test]
    fn overflow_is_an_error() {
        let big = "9223372036854775807";
        let expr = parse(&format!("{big}*{big}")).unwrap();
        assert_eq!(evaluate(&expr), Err(EvalError::Overflow));
        let expr = parse(&format!("{big}+{big}")).unwrap();
        assert_eq!(evaluate(&expr), Err(EvalError::Overflow));
    }

    #[test]
    fn oracle_agrees_on_examples() {
        for s in ["g(0)*g(0,1)", "g5*g(1,2,3)", "1/3*g(0,1)*g(2,3) - eps(0,1,2,3)*g5", "(g(0)+g(1))*g(1)"] {
            let expr = parse(s).unwrap();
            for rep in [Representation::standard(), Representation::chiral()] {
                assert_eq!(evaluate_oracle(&expr, rep).unwrap(), evaluate(&expr).unwrap(), "{s}");
            }
        }
    }

    #[test]
    fn simplify_pipeline() {
        assert_eq!(simplify("g(0)*g(0,1)", RenderFormat::Plain).unwrap(), "g(1)");
        assert!(matches!(simplify("g(", RenderFormat::Plain), Err(SimplifyError::Parse(_))));
    }
}
