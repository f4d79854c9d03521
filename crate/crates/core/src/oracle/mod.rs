//! Explicit Dirac matrices used as ground truth for the symbolic engine.
//!
//! A [`Representation`] holds four generator matrices checked against the
//! anticommutation relation, the 16 blade matrices built from them by
//! antisymmetrization, and the trace normalizers used by [`Representation::decompose`].

mod matrix;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::index::assignment_vec;
use crate::algebra::{Blade, Metric, Multivector, Rational, TetradIndex};

pub use matrix::{gaussian, ExactComplexMatrix, GaussianRational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("γ^{a}γ^{b} + γ^{b}γ^{a} is not 2η^{{ab}}·I")]
    Anticommutation { a: u8, b: u8 },
    #[error("γ^{0} has the wrong hermiticity")]
    Hermiticity(u8),
    #[error("blade {0} has trace(B²) = {1}, expected a nonzero real value")]
    Normalizer(Blade, String),
    #[error("matrix is not in the real span of the blade matrices (coefficient of {blade} is {coefficient})")]
    ComplexCoefficient { blade: Blade, coefficient: String },
    #[error("decomposition leaves a nonzero residual")]
    Residual,
    #[error("antisymmetrized products take at most 4 indices, got {0}")]
    Arity(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepresentationName {
    /// Dirac–Pauli: `γ^0 = diag(1, 1, -1, -1)`.
    Standard,
    /// Weyl: `γ^0` off-diagonal.
    Chiral,
}

impl RepresentationName {
    pub const ALL: [RepresentationName; 2] = [RepresentationName::Standard, RepresentationName::Chiral];

    pub fn as_str(self) -> &'static str {
        match self {
            RepresentationName::Standard => "standard",
            RepresentationName::Chiral => "chiral",
        }
    }
}

impl fmt::Display for RepresentationName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RepresentationName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "standard" => Ok(Self::Standard),
            "chiral" => Ok(Self::Chiral),
            other => Err(format!("unknown representation `{other}` (expected standard or chiral)")),
        }
    }
}

/// A validated matrix realization of the four generators.
#[derive(Clone, Debug)]
pub struct Representation {
    name: RepresentationName,
    generators: [ExactComplexMatrix; 4],
    blades: Vec<ExactComplexMatrix>,
    normalizers: Vec<Rational>,
    /// Antisymmetrized products for every index tuple of length 0..=3,
    /// keyed by `(4^len - 1)/3 + case`.
    brackets: Vec<ExactComplexMatrix>,
}

fn bracket_slot(indices: &[TetradIndex]) -> usize {
    let offset = (4usize.pow(indices.len() as u32) - 1) / 3;
    offset + indices.iter().fold(0, |acc, i| acc * 4 + i.usize())
}

/// Entries of `[[0, σ], [-σ, 0]]` for Pauli matrix `σ_k`.
fn spatial_gamma(k: usize) -> ExactComplexMatrix {
    let pauli: [[(i64, i64); 2]; 2] = match k {
        1 => [[(0, 0), (1, 0)], [(1, 0), (0, 0)]],
        2 => [[(0, 0), (0, -1)], [(0, 1), (0, 0)]],
        3 => [[(1, 0), (0, 0)], [(0, 0), (-1, 0)]],
        _ => unreachable!(),
    };
    let mut m = [[(0, 0); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            let (re, im) = pauli[i][j];
            m[i][j + 2] = (re, im);
            m[i + 2][j] = (-re, -im);
        }
    }
    ExactComplexMatrix::from_integers(m)
}

fn standard_generators() -> [ExactComplexMatrix; 4] {
    let g0 = ExactComplexMatrix::from_integers([
        [(1, 0), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (1, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (-1, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (-1, 0)],
    ]);
    [g0, spatial_gamma(1), spatial_gamma(2), spatial_gamma(3)]
}

fn chiral_generators() -> [ExactComplexMatrix; 4] {
    let g0 = ExactComplexMatrix::from_integers([
        [(0, 0), (0, 0), (1, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (1, 0)],
        [(1, 0), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (1, 0), (0, 0), (0, 0)],
    ]);
    [g0, spatial_gamma(1), spatial_gamma(2), spatial_gamma(3)]
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<(Vec<usize>, i64)>) {
        if prefix.len() == n {
            let mut sign = 1;
            for i in 0..n {
                for j in (i + 1)..n {
                    if prefix[i] > prefix[j] {
                        sign = -sign;
                    }
                }
            }
            out.push((prefix.clone(), sign));
            return;
        }
        for k in 0..n {
            if !prefix.contains(&k) {
                prefix.push(k);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

impl Representation {
    /// Validates `generators` and tabulates blade matrices and normalizers.
    pub fn new(name: RepresentationName, generators: [ExactComplexMatrix; 4]) -> Result<Self, OracleError> {
        let id = ExactComplexMatrix::identity();
        for a in TetradIndex::ALL {
            for b in TetradIndex::ALL {
                let (ga, gb) = (&generators[a.usize()], &generators[b.usize()]);
                let anti = &(ga * gb) + &(gb * ga);
                let eta2 = Rational::from_integer(2 * i64::from(Metric::component(a, b)));
                if anti != id.scale_rational(eta2) {
                    return Err(OracleError::Anticommutation { a: a.value(), b: b.value() });
                }
            }
        }
        for (k, g) in generators.iter().enumerate() {
            let dagger = g.conjugate_transpose();
            let expected = if k == 0 { g.clone() } else { -g };
            if dagger != expected {
                return Err(OracleError::Hermiticity(k as u8));
            }
        }
        let mut rep = Self {
            name,
            generators,
            blades: Vec::with_capacity(16),
            normalizers: Vec::with_capacity(16),
            brackets: Vec::new(),
        };
        let mut brackets = Vec::with_capacity(85);
        for len in 0..=3 {
            for case in 0..4usize.pow(len as u32) {
                brackets.push(rep.compute_antisymmetrized(&assignment_vec(case, len)));
            }
        }
        rep.brackets = brackets;
        for blade in Blade::ALL {
            let m = if blade.grade() == 4 {
                // γ^(5) is the ordered product, not the antisymmetrized one
                rep.generators.iter().fold(ExactComplexMatrix::identity(), |acc, g| &acc * g)
            } else {
                rep.antisymmetrized(&blade.indices())?
            };
            let norm = m.trace_of_product(&m);
            if !norm.im.is_zero() || norm.re.is_zero() {
                return Err(OracleError::Normalizer(blade, format!("{}+{}i", norm.re, norm.im)));
            }
            rep.normalizers.push(norm.re);
            rep.blades.push(m);
        }
        Ok(rep)
    }

    /// Dirac–Pauli representation, built once.
    pub fn standard() -> &'static Representation {
        static REP: OnceLock<Representation> = OnceLock::new();
        REP.get_or_init(|| {
            Representation::new(RepresentationName::Standard, standard_generators())
                .expect("standard representation satisfies the Clifford relation")
        })
    }

    /// Weyl (chiral) representation, built once.
    pub fn chiral() -> &'static Representation {
        static REP: OnceLock<Representation> = OnceLock::new();
        REP.get_or_init(|| {
            Representation::new(RepresentationName::Chiral, chiral_generators())
                .expect("chiral representation satisfies the Clifford relation")
        })
    }

    pub fn by_name(name: RepresentationName) -> &'static Representation {
        match name {
            RepresentationName::Standard => Self::standard(),
            RepresentationName::Chiral => Self::chiral(),
        }
    }

    pub fn name(&self) -> RepresentationName {
        self.name
    }

    pub fn dirac_matrix(&self, a: TetradIndex) -> &ExactComplexMatrix {
        &self.generators[a.usize()]
    }

    pub fn blade_matrix(&self, blade: Blade) -> &ExactComplexMatrix {
        &self.blades[blade.ordinal()]
    }

    /// `trace(B²)` for each blade, computed at construction.
    pub fn normalizer(&self, blade: Blade) -> Rational {
        self.normalizers[blade.ordinal()]
    }

    /// `γ^{[i j ...]}`: the signed average over all orderings of the product
    /// of generators, for any index tuple of length 0..=4.
    pub fn antisymmetrized(&self, indices: &[TetradIndex]) -> Result<ExactComplexMatrix, OracleError> {
        match indices.len() {
            0..=3 if !self.brackets.is_empty() => Ok(self.brackets[bracket_slot(indices)].clone()),
            0..=4 => Ok(self.compute_antisymmetrized(indices)),
            n => Err(OracleError::Arity(n)),
        }
    }

    fn compute_antisymmetrized(&self, indices: &[TetradIndex]) -> ExactComplexMatrix {
        let n = indices.len();
        let perms = permutations(n);
        let mut acc = ExactComplexMatrix::zero();
        for (perm, sign) in &perms {
            let product = perm
                .iter()
                .fold(ExactComplexMatrix::identity(), |m, &k| &m * self.dirac_matrix(indices[k]));
            acc = if *sign > 0 { &acc + &product } else { &acc - &product };
        }
        acc.scale_rational(Rational::new(1, perms.len() as i64))
    }

    /// Realizes a multivector as `Σ c_b · B_b`.
    pub fn matrix_of(&self, mv: &Multivector) -> ExactComplexMatrix {
        mv.terms().fold(ExactComplexMatrix::zero(), |acc, (b, c)| {
            &acc + &self.blade_matrix(b).scale_rational(c)
        })
    }

    /// Trace projection onto the blade basis:
    /// `c_b = trace(M·B) / trace(B²)`, followed by a residual check.
    pub fn decompose(&self, m: &ExactComplexMatrix) -> Result<Multivector, OracleError> {
        let mut mv = Multivector::zero();
        for blade in Blade::ALL {
            let projection = m.trace_of_product(self.blade_matrix(blade));
            if projection.is_zero() {
                continue;
            }
            let coefficient = projection.unscale(self.normalizer(blade));
            if !coefficient.im.is_zero() {
                return Err(OracleError::ComplexCoefficient {
                    blade,
                    coefficient: format!("{}+{}i", coefficient.re, coefficient.im),
                });
            }
            mv.set_coefficient(blade, coefficient.re);
        }
        if &self.matrix_of(&mv) != m {
            return Err(OracleError::Residual);
        }
        Ok(mv)
    }

    pub fn oracle_blade_product(&self, a: Blade, b: Blade) -> Result<Multivector, OracleError> {
        self.decompose(&(self.blade_matrix(a) * self.blade_matrix(b)))
    }

    /// Product of two multivectors through their matrices.
    pub fn oracle_product(&self, x: &Multivector, y: &Multivector) -> Result<Multivector, OracleError> {
        self.decompose(&(&self.matrix_of(x) * &self.matrix_of(y)))
    }
}

/// Identity matrix scaled by an integer.
pub fn scalar_matrix(value: i64) -> ExactComplexMatrix {
    ExactComplexMatrix::identity().scale_rational(Rational::from_integer(value))
}
