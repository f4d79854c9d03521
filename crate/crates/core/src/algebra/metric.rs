use super::{Rational, TetradIndex};

/// The tetrad metric `diag(1, -1, -1, -1)`.
///
/// In the tetrad basis upper and lower components coincide.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Metric;

impl Metric {
    pub const DETERMINANT: i8 = -1;

    pub fn component(a: TetradIndex, b: TetradIndex) -> i8 {
        match (a.value(), b.value()) {
            (0, 0) => 1,
            (x, y) if x == y => -1,
            _ => 0,
        }
    }

    /// Diagonal entry; the factor picked up when raising or lowering `a`.
    pub fn diagonal(a: TetradIndex) -> i8 {
        Self::component(a, a)
    }

    pub fn determinant() -> i8 {
        Self::DETERMINANT
    }
}

pub fn metric_component(a: TetradIndex, b: TetradIndex) -> i8 {
    Metric::component(a, b)
}

pub(crate) fn eta(a: TetradIndex, b: TetradIndex) -> Rational {
    Rational::from_integer(i64::from(Metric::component(a, b)))
}
