//! Closed-form products of generators.
//!
//! Every product of two canonical blades is obtained from one identity per
//! [`GradePair`]; the products with `γ^(5)` on the left reuse the identity for
//! the opposite order together with the known (anti)commutation sign. The
//! results are tabulated once and [`Engine::mv_product`] extends them
//! bilinearly.

pub mod contraction;
pub mod rules;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{CheckedAdd, CheckedMul, Zero};

use crate::algebra::{epsilon_pseudo, AlgebraError, Blade, Multivector, Rational, TetradIndex, ALL_RAISED};

/// Grades of the left and right factor of a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradePair {
    pub left: usize,
    pub right: usize,
}

/// How a [`GradePair`] is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dispatch {
    /// One factor is the identity.
    Scalar,
    /// Direct use of a product identity.
    Rule(ProductRule),
    /// `γ^(5) X`, evaluated as `sign · X γ^(5)`.
    Commuted { rule: ProductRule, sign: i64 },
}

impl GradePair {
    pub fn new(left: usize, right: usize) -> Self {
        Self { left, right }
    }

    pub fn all() -> impl Iterator<Item = GradePair> {
        (0..=4).flat_map(|l| (0..=4).map(move |r| GradePair::new(l, r)))
    }

    pub fn dispatch(self) -> Dispatch {
        use ProductRule::*;
        let rule = match (self.left, self.right) {
            (0, _) | (_, 0) => return Dispatch::Scalar,
            (4, 1) => return Dispatch::Commuted { rule: VectorPseudoscalar, sign: -1 },
            (4, 2) => return Dispatch::Commuted { rule: BivectorPseudoscalar, sign: 1 },
            (4, 3) => return Dispatch::Commuted { rule: TrivectorPseudoscalar, sign: -1 },
            (1, 1) => VectorVector,
            (1, 2) => VectorBivector,
            (2, 1) => BivectorVector,
            (1, 3) => VectorTrivector,
            (3, 1) => TrivectorVector,
            (1, 4) => VectorPseudoscalar,
            (2, 2) => BivectorBivector,
            (2, 3) => BivectorTrivector,
            (3, 2) => TrivectorBivector,
            (2, 4) => BivectorPseudoscalar,
            (3, 3) => TrivectorTrivector,
            (3, 4) => TrivectorPseudoscalar,
            (4, 4) => PseudoscalarSquare,
            (l, r) => unreachable!("grade pair ({l}, {r}) out of range"),
        };
        Dispatch::Rule(rule)
    }
}

/// The thirteen generator product identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductRule {
    VectorVector,
    VectorBivector,
    BivectorVector,
    VectorTrivector,
    TrivectorVector,
    VectorPseudoscalar,
    BivectorBivector,
    BivectorTrivector,
    TrivectorBivector,
    BivectorPseudoscalar,
    TrivectorTrivector,
    TrivectorPseudoscalar,
    PseudoscalarSquare,
}

impl ProductRule {
    pub const ALL: [ProductRule; 13] = [
        ProductRule::VectorVector,
        ProductRule::VectorBivector,
        ProductRule::BivectorVector,
        ProductRule::VectorTrivector,
        ProductRule::TrivectorVector,
        ProductRule::VectorPseudoscalar,
        ProductRule::BivectorBivector,
        ProductRule::BivectorTrivector,
        ProductRule::TrivectorBivector,
        ProductRule::BivectorPseudoscalar,
        ProductRule::TrivectorTrivector,
        ProductRule::TrivectorPseudoscalar,
        ProductRule::PseudoscalarSquare,
    ];

    pub fn grades(self) -> GradePair {
        use ProductRule::*;
        let (l, r) = match self {
            VectorVector => (1, 1),
            VectorBivector => (1, 2),
            BivectorVector => (2, 1),
            VectorTrivector => (1, 3),
            TrivectorVector => (3, 1),
            VectorPseudoscalar => (1, 4),
            BivectorBivector => (2, 2),
            BivectorTrivector => (2, 3),
            TrivectorBivector => (3, 2),
            BivectorPseudoscalar => (2, 4),
            TrivectorTrivector => (3, 3),
            TrivectorPseudoscalar => (3, 4),
            PseudoscalarSquare => (4, 4),
        };
        GradePair::new(l, r)
    }

    /// Number of free indices; `γ^(5)` carries none.
    pub fn arity(self) -> usize {
        let g = self.grades();
        let free = |grade: usize| if grade == 4 { 0 } else { grade };
        free(g.left) + free(g.right)
    }

    pub fn name(self) -> &'static str {
        use ProductRule::*;
        match self {
            VectorVector => "vector-vector",
            VectorBivector => "vector-bivector",
            BivectorVector => "bivector-vector",
            VectorTrivector => "vector-trivector",
            TrivectorVector => "trivector-vector",
            VectorPseudoscalar => "vector-pseudoscalar",
            BivectorBivector => "bivector-bivector",
            BivectorTrivector => "bivector-trivector",
            TrivectorBivector => "trivector-bivector",
            BivectorPseudoscalar => "bivector-pseudoscalar",
            TrivectorTrivector => "trivector-trivector",
            TrivectorPseudoscalar => "trivector-pseudoscalar",
            PseudoscalarSquare => "pseudoscalar-square",
        }
    }
}

impl fmt::Display for ProductRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown product rule `{s}`"))
    }
}

/// Product table for the 16 blades plus the rule evaluators behind it.
pub struct Engine {
    sign_flip: Option<ProductRule>,
    table: Vec<Multivector>,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Debug for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Engine").field("sign_flip", &self.sign_flip).finish_non_exhaustive()
    }
}

impl Engine {
    pub fn new() -> Self {
        Self::build(None)
    }

    /// An engine whose `rule` returns the negated right-hand side.
    ///
    /// Fault injection for exercising the verifier; never use for results.
    pub fn with_sign_flip(rule: ProductRule) -> Self {
        Self::build(Some(rule))
    }

    /// The shared, fault-free engine.
    pub fn global() -> &'static Engine {
        static ENGINE: OnceLock<Engine> = OnceLock::new();
        ENGINE.get_or_init(Engine::new)
    }

    pub fn sign_flip(&self) -> Option<ProductRule> {
        self.sign_flip
    }

    fn build(sign_flip: Option<ProductRule>) -> Self {
        let mut engine = Self {
            sign_flip,
            table: Vec::with_capacity(256),
        };
        let table: Vec<Multivector> = Blade::ALL
            .iter()
            .flat_map(|&a| Blade::ALL.iter().map(move |&b| (a, b)))
            .map(|(a, b)| engine.compute_blade_product(a, b))
            .collect();
        engine.table = table;
        engine
    }

    /// Right-hand side of `rule` for the given left-then-right indices.
    pub fn rule_rhs(&self, rule: ProductRule, idx: &[TetradIndex]) -> Result<Multivector, AlgebraError> {
        use rules::*;
        use ProductRule::*;
        if idx.len() != rule.arity() {
            return Err(AlgebraError::InvalidArity(idx.len()));
        }
        let i = |k: usize| idx[k];
        let value = match rule {
            VectorVector => vector_vector(i(0), i(1)),
            VectorBivector => vector_bivector(i(0), i(1), i(2)),
            BivectorVector => bivector_vector(i(0), i(1), i(2)),
            VectorTrivector => vector_trivector(i(0), i(1), i(2), i(3)),
            TrivectorVector => trivector_vector(i(0), i(1), i(2), i(3)),
            VectorPseudoscalar => vector_pseudoscalar(i(0)),
            BivectorBivector => bivector_bivector(i(0), i(1), i(2), i(3)),
            BivectorTrivector => bivector_trivector(i(0), i(1), i(2), i(3), i(4)),
            TrivectorBivector => trivector_bivector(i(0), i(1), i(2), i(3), i(4)),
            BivectorPseudoscalar => bivector_pseudoscalar(i(0), i(1)),
            TrivectorTrivector => trivector_trivector(i(0), i(1), i(2), i(3), i(4), i(5)),
            TrivectorPseudoscalar => trivector_pseudoscalar(i(0), i(1), i(2)),
            PseudoscalarSquare => pseudoscalar_square(),
        };
        Ok(if self.sign_flip == Some(rule) { -value } else { value })
    }

    fn compute_blade_product(&self, a: Blade, b: Blade) -> Multivector {
        let operand = |blade: Blade| if blade.grade() == 4 { Vec::new() } else { blade.indices() };
        match GradePair::new(a.grade(), b.grade()).dispatch() {
            Dispatch::Scalar => {
                if a == Blade::SCALAR {
                    Multivector::blade(b)
                } else {
                    Multivector::blade(a)
                }
            }
            Dispatch::Rule(rule) => {
                let mut idx = operand(a);
                idx.extend(operand(b));
                self.rule_rhs(rule, &idx).expect("arity matches grade pair")
            }
            Dispatch::Commuted { rule, sign } => {
                let value = self.rule_rhs(rule, &operand(b)).expect("arity matches grade pair");
                value.scale(Rational::from_integer(sign))
            }
        }
    }

    /// Memoized product of two canonical blades.
    pub fn blade_product(&self, a: Blade, b: Blade) -> &Multivector {
        &self.table[a.ordinal() * 16 + b.ordinal()]
    }

    pub fn mv_product(&self, x: &Multivector, y: &Multivector) -> Multivector {
        let mut out = Multivector::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                out.add_scaled(ca * cb, self.blade_product(a, b));
            }
        }
        out
    }

    /// [`Engine::mv_product`] returning `None` on coefficient overflow.
    pub fn checked_mv_product(&self, x: &Multivector, y: &Multivector) -> Option<Multivector> {
        let mut acc = [Rational::from_integer(0); 16];
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let factor = ca.checked_mul(&cb)?;
                for (slot, c) in acc.iter_mut().zip(self.blade_product(a, b).coefficients()) {
                    if !c.is_zero() {
                        *slot = slot.checked_add(&factor.checked_mul(c)?)?;
                    }
                }
            }
        }
        let mut out = Multivector::zero();
        for (blade, c) in Blade::ALL.into_iter().zip(acc) {
            out.set_coefficient(blade, c);
        }
        Some(out)
    }

    /// `γ^A γ^B + γ^B γ^A`, which must equal `2 η^{AB} I`.
    pub fn anticommutator(&self, a: TetradIndex, b: TetradIndex) -> Multivector {
        let (ga, gb) = (Multivector::gamma(a), Multivector::gamma(b));
        self.mv_product(&ga, &gb) + self.mv_product(&gb, &ga)
    }
}

/// `γ^{[EABC]} = -ε^{EABC} γ^(5)`
pub fn four_blade_reduce(e: TetradIndex, a: TetradIndex, b: TetradIndex, c: TetradIndex) -> Multivector {
    Multivector::pseudoscalar().scale(-epsilon_pseudo(ALL_RAISED, [e, a, b, c]))
}

pub fn blade_product(a: Blade, b: Blade) -> Multivector {
    Engine::global().blade_product(a, b).clone()
}

pub fn mv_product(x: &Multivector, y: &Multivector) -> Multivector {
    Engine::global().mv_product(x, y)
}

pub fn anticommutator(a: TetradIndex, b: TetradIndex) -> Multivector {
    Engine::global().anticommutator(a, b)
}
