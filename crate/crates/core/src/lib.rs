//! Exact symbolic products in the Clifford algebra of four-dimensional
//! spacetime with metric `diag(1, -1, -1, -1)`.
//!
//! The crate is split into:
//!
//! * [`algebra`]: tetrad indices, the metric, Levi-Civita symbol and
//!   pseudo-tensor, the 16 canonical blades and [`Multivector`].
//! * [`engine`]: closed-form product of any two blades, built from one
//!   identity per pair of generator grades, extended bilinearly.
//! * [`oracle`]: explicit 4×4 Dirac matrices over the Gaussian rationals and
//!   trace-projection back onto the blade basis.
//! * [`verifier`]: exhaustive comparison of engine and oracle over every
//!   index assignment.
//! * [`expr`]: a small expression language with plain, LaTeX and JSON output.

pub mod algebra;
pub mod engine;
pub mod expr;
pub mod oracle;
pub mod verifier;

pub use algebra::{Blade, Multivector, Rational, TetradIndex};
pub use engine::{blade_product, mv_product, Engine};
