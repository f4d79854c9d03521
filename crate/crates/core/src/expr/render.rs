use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::algebra::{Blade, Multivector, Rational};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RenderFormat {
    #[default]
    Plain,
    Latex,
    Json,
}

impl FromStr for RenderFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Self::Plain),
            "latex" => Ok(Self::Latex),
            "json" => Ok(Self::Json),
            other => Err(format!("unknown format `{other}` (expected plain, latex or json)")),
        }
    }
}

impl fmt::Display for RenderFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Plain => "plain",
            Self::Latex => "latex",
            Self::Json => "json",
        })
    }
}

/// Canonical text for a multivector, terms in blade order.
///
/// Plain output is itself a valid expression that evaluates back to `mv`.
pub fn render(mv: &Multivector, format: RenderFormat) -> String {
    match format {
        RenderFormat::Plain => join_terms(mv, plain_term),
        RenderFormat::Latex => join_terms(mv, latex_term),
        RenderFormat::Json => serde_json::to_string(mv).expect("multivector serializes"),
    }
}

/// Joins terms with ` + ` / ` - `; `term` gets the absolute coefficient.
fn join_terms(mv: &Multivector, term: fn(Blade, Rational) -> String) -> String {
    let mut out = String::new();
    for (i, (blade, c)) in mv.terms().enumerate() {
        let text = term(blade, c.abs());
        match (i, c.is_negative()) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn plain_term(blade: Blade, magnitude: Rational) -> String {
    if blade == Blade::SCALAR {
        magnitude.to_string()
    } else if magnitude.is_one() {
        blade.to_string()
    } else {
        format!("{magnitude}*{blade}")
    }
}

fn latex_blade(blade: Blade) -> String {
    let digits: String = blade.indices().iter().map(|i| i.to_string()).collect();
    match blade.grade() {
        0 => String::new(),
        1 => format!("\\gamma^{{{digits}}}"),
        4 => "\\gamma^{(5)}".to_string(),
        _ => format!("\\gamma^{{[{digits}]}}"),
    }
}

fn latex_coefficient(magnitude: Rational) -> String {
    if magnitude.is_integer() {
        magnitude.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", magnitude.numer(), magnitude.denom())
    }
}

fn latex_term(blade: Blade, magnitude: Rational) -> String {
    if blade == Blade::SCALAR {
        latex_coefficient(magnitude)
    } else if magnitude.is_one() {
        latex_blade(blade)
    } else {
        format!("{}{}", latex_coefficient(magnitude), latex_blade(blade))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::index::indices;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn plain() {
        let [t, x] = indices([0, 1]);
        assert_eq!(render(&Multivector::one(), RenderFormat::Plain), "1");
        assert_eq!(render(&Multivector::zero(), RenderFormat::Plain), "0");
        let mv = Multivector::gamma2(t, x) - Multivector::one();
        assert_eq!(render(&mv, RenderFormat::Plain), "-1 + g(0,1)");
        let mv = Multivector::gamma(x).scale(r(-1, 2)) + Multivector::pseudoscalar().scale(r(3, 1));
        assert_eq!(render(&mv, RenderFormat::Plain), "-1/2*g(1) + 3*g5");
    }

    #[test]
    fn latex() {
        let [t, x, y] = indices([0, 1, 2]);
        assert_eq!(render(&Multivector::pseudoscalar(), RenderFormat::Latex), "\\gamma^{(5)}");
        let mv = Multivector::gamma(t) - Multivector::gamma3(t, x, y).scale(r(1, 3));
        assert_eq!(render(&mv, RenderFormat::Latex), "\\gamma^{0} - \\frac{1}{3}\\gamma^{[012]}");
        assert_eq!(render(&Multivector::scalar(r(-2, 1)), RenderFormat::Latex), "-2");
    }

    #[test]
    fn json() {
        let [t, x] = indices([0, 1]);
        let mv = Multivector::gamma2(t, x) - Multivector::one();
        assert_eq!(render(&mv, RenderFormat::Json), r#"{"scalar":"-1","bivector":{"0,1":"1"}}"#);
    }

    #[test]
    fn format_names() {
        for f in [RenderFormat::Plain, RenderFormat::Latex, RenderFormat::Json] {
            assert_eq!(f.to_string().parse::<RenderFormat>().unwrap(), f);
        }
        assert!("html".parse::<RenderFormat>().is_err());
    }
}
