//! Basis, metric, Levi-Civita machinery and the multivector value type.

mod blade;
pub mod index;
pub mod levi_civita;
mod metric;
mod multivector;

use thiserror::Error;

pub use blade::Blade;
pub use index::{canonicalize_indices, Canonical, TetradIndex};
pub use levi_civita::{epsilon_det_product, epsilon_pseudo, epsilon_symbol, ALL_LOWERED, ALL_RAISED};
pub use metric::{metric_component, Metric};
pub(crate) use metric::eta;
pub use multivector::{format_rational, Multivector};

/// Exact rational coefficient.
pub type Rational = num_rational::Rational64;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("tetrad index {0} is outside 0..=3")]
    IndexOutOfRange(i64),
    #[error("expected between 1 and 4 indices, got {0}")]
    InvalidArity(usize),
    #[error("blade indices must be strictly ascending")]
    NotAscending,
}
