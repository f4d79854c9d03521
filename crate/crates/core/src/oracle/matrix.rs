use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::algebra::Rational;

/// Exact complex number `a + bi` with rational parts.
pub type GaussianRational = Complex<Rational>;

pub fn gaussian(re: i64, im: i64) -> GaussianRational {
    Complex::new(Rational::from_integer(re), Rational::from_integer(im))
}

/// 4×4 matrix over the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactComplexMatrix {
    entries: [[GaussianRational; 4]; 4],
}

impl ExactComplexMatrix {
    pub fn zero() -> Self {
        Self {
            entries: [[GaussianRational::zero(); 4]; 4],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.entries[i][i] = GaussianRational::one();
        }
        m
    }

    pub fn from_entries(entries: [[GaussianRational; 4]; 4]) -> Self {
        Self { entries }
    }

    /// Builds a matrix from `(re, im)` integer pairs.
    pub fn from_integers(entries: [[(i64, i64); 4]; 4]) -> Self {
        Self {
            entries: entries.map(|row| row.map(|(re, im)| gaussian(re, im))),
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> GaussianRational {
        self.entries[row][col]
    }

    pub fn trace(&self) -> GaussianRational {
        (0..4).map(|i| self.entries[i][i]).fold(GaussianRational::zero(), |a, b| a + b)
    }

    /// `trace(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &Self) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for i in 0..4 {
            for j in 0..4 {
                let (x, y) = (self.entries[i][j], other.entries[j][i]);
                if !x.is_zero() && !y.is_zero() {
                    acc += x * y;
                }
            }
        }
        acc
    }

    pub fn scale(&self, factor: GaussianRational) -> Self {
        Self {
            entries: self.entries.map(|row| row.map(|x| x * factor)),
        }
    }

    pub fn scale_rational(&self, factor: Rational) -> Self {
        Self {
            entries: self.entries.map(|row| row.map(|x| x.scale(factor))),
        }
    }

    pub fn conjugate_transpose(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.entries[j][i] = self.entries[i][j].conj();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }

    /// Positions of nonzero entries, row-major.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, GaussianRational)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    out.push((i, j, *x));
                }
            }
        }
        out
    }
}

impl Mul for &ExactComplexMatrix {
    type Output = ExactComplexMatrix;

    fn mul(self, rhs: &ExactComplexMatrix) -> ExactComplexMatrix {
        let mut out = ExactComplexMatrix::zero();
        for i in 0..4 {
            for k in 0..4 {
                let x = self.entries[i][k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..4 {
                    let y = rhs.entries[k][j];
                    if !y.is_zero() {
                        out.entries[i][j] += x * y;
                    }
                }
            }
        }
        out
    }
}

impl Mul for ExactComplexMatrix {
    type Output = ExactComplexMatrix;

    fn mul(self, rhs: ExactComplexMatrix) -> ExactComplexMatrix {
        &self * &rhs
    }
}

impl Add for &ExactComplexMatrix {
    type Output = ExactComplexMatrix;

    fn add(self, rhs: &ExactComplexMatrix) -> ExactComplexMatrix {
        let mut out = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] += rhs.entries[i][j];
            }
        }
        out
    }
}

impl Add for ExactComplexMatrix {
    type Output = ExactComplexMatrix;

    fn add(self, rhs: ExactComplexMatrix) -> ExactComplexMatrix {
        &self + &rhs
    }
}

impl Sub for &ExactComplexMatrix {
    type Output = ExactComplexMatrix;

    fn sub(self, rhs: &ExactComplexMatrix) -> ExactComplexMatrix {
        self + &-rhs
    }
}

impl Sub for ExactComplexMatrix {
    type Output = ExactComplexMatrix;

    fn sub(self, rhs: ExactComplexMatrix) -> ExactComplexMatrix {
        &self - &rhs
    }
}

impl Neg for &ExactComplexMatrix {
    type Output = ExactComplexMatrix;

    fn neg(self) -> ExactComplexMatrix {
        ExactComplexMatrix {
            entries: self.entries.map(|row| row.map(|x| -x)),
        }
    }
}

impl Neg for ExactComplexMatrix {
    type Output = ExactComplexMatrix;

    fn neg(self) -> ExactComplexMatrix {
        -&self
    }
}

impl fmt::Debug for ExactComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| format!("{}+{}i", x.re, x.im)).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let m = ExactComplexMatrix::from_integers([
            [(1, 0), (0, 1), (0, 0), (2, 0)],
            [(0, 0), (0, 0), (0, -1), (0, 0)],
            [(3, 0), (0, 0), (1, 0), (0, 0)],
            [(0, 0), (0, 0), (0, 0), (-1, 1)],
        ]);
        let id = ExactComplexMatrix::identity();
        assert_eq!(&m * &id, m);
        assert_eq!(&id * &m, m);
        assert_eq!(id.trace(), gaussian(4, 0));
        assert_eq!(m.trace(), gaussian(1, 1));
        assert!((&m - &m).is_zero());
    }

    #[test]
    fn trace_of_product_matches_product_trace() {
        let a = ExactComplexMatrix::from_integers([
            [(0, 0), (1, 0), (0, 0), (0, 0)],
            [(0, 0), (0, 0), (0, 1), (0, 0)],
            [(0, 0), (0, 0), (0, 0), (1, -1)],
            [(2, 0), (0, 0), (0, 0), (0, 0)],
        ]);
        let b = a.conjugate_transpose();
        assert_eq!(a.trace_of_product(&b), (&a * &b).trace());
        assert_eq!(a.trace_of_product(&a), (&a * &a).trace());
    }
}
