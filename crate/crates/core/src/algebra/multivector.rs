use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{CheckedAdd, CheckedMul, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use super::{canonicalize_indices, AlgebraError, Blade, Rational, TetradIndex};

/// An element of the algebra: exact rational coefficients on the 16 blades.
///
/// Coefficients are held densely by blade ordinal; a zero coefficient is the
/// same as an absent blade, so `==` is exact coefficient-wise comparison.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Multivector {
    coeffs: [Rational; 16],
}

impl Multivector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(value: Rational) -> Self {
        Self::term(Blade::SCALAR, value)
    }

    pub fn one() -> Self {
        Self::blade(Blade::SCALAR)
    }

    pub fn blade(blade: Blade) -> Self {
        Self::term(blade, Rational::from_integer(1))
    }

    pub fn term(blade: Blade, coefficient: Rational) -> Self {
        let mut mv = Self::zero();
        mv.coeffs[blade.ordinal()] = coefficient;
        mv
    }

    pub fn pseudoscalar() -> Self {
        Self::blade(Blade::PSEUDOSCALAR)
    }

    /// The antisymmetrized generator `γ^{[i j ...]}` for 0 to 3 indices,
    /// brought to canonical blade form. Repeated indices give zero.
    pub fn generator(indices: &[TetradIndex]) -> Result<Self, AlgebraError> {
        match indices.len() {
            0 => Ok(Self::one()),
            1..=3 => {
                let c = canonicalize_indices(indices)?;
                if c.sign == 0 {
                    return Ok(Self::zero());
                }
                let blade = Blade::from_ascending(&c.indices)?;
                Ok(Self::term(blade, Rational::from_integer(i64::from(c.sign))))
            }
            n => Err(AlgebraError::InvalidArity(n)),
        }
    }

    pub fn gamma(a: TetradIndex) -> Self {
        Self::blade(Blade::vector(a))
    }

    pub fn gamma2(a: TetradIndex, b: TetradIndex) -> Self {
        Self::generator(&[a, b]).expect("arity 2 is valid")
    }

    pub fn gamma3(a: TetradIndex, b: TetradIndex, c: TetradIndex) -> Self {
        Self::generator(&[a, b, c]).expect("arity 3 is valid")
    }

    pub fn coefficient(&self, blade: Blade) -> Rational {
        self.coeffs[blade.ordinal()]
    }

    pub fn set_coefficient(&mut self, blade: Blade, value: Rational) {
        self.coeffs[blade.ordinal()] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero terms in canonical blade order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, Rational)> + '_ {
        Blade::ALL
            .into_iter()
            .zip(self.coeffs.iter().copied())
            .filter(|(_, c)| !c.is_zero())
    }

    /// Grades carrying a nonzero coefficient.
    pub fn grades(&self) -> Vec<usize> {
        let mut grades: Vec<usize> = self.terms().map(|(b, _)| b.grade()).collect();
        grades.dedup();
        grades
    }

    pub fn scale(&self, factor: Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= factor;
        }
        out
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, factor: Rational, other: &Self) {
        if factor.is_zero() {
            return;
        }
        for (c, o) in self.coeffs.iter_mut().zip(other.coeffs.iter()) {
            if !o.is_zero() {
                *c += factor * o;
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let mut out = Self::zero();
        for i in 0..16 {
            out.coeffs[i] = self.coeffs[i].checked_add(&other.coeffs[i])?;
        }
        Some(out)
    }

    pub fn checked_scale(&self, factor: Rational) -> Option<Self> {
        let mut out = Self::zero();
        for i in 0..16 {
            out.coeffs[i] = self.coeffs[i].checked_mul(&factor)?;
        }
        Some(out)
    }

    pub(crate) fn coefficients(&self) -> &[Rational; 16] {
        &self.coeffs
    }
}

impl Add for Multivector {
    type Output = Multivector;

    fn add(mut self, rhs: Multivector) -> Multivector {
        self += &rhs;
        self
    }
}

impl Add<&Multivector> for &Multivector {
    type Output = Multivector;

    fn add(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        for (c, o) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *c += o;
        }
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        *self += &rhs;
    }
}

impl Sub for Multivector {
    type Output = Multivector;

    fn sub(mut self, rhs: Multivector) -> Multivector {
        self -= &rhs;
        self
    }
}

impl Sub<&Multivector> for &Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&Multivector> for Multivector {
    fn sub_assign(&mut self, rhs: &Multivector) {
        for (c, o) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *c -= o;
        }
    }
}

impl Neg for Multivector {
    type Output = Multivector;

    fn neg(mut self) -> Multivector {
        for c in self.coeffs.iter_mut() {
            *c = -*c;
        }
        self
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        -self.clone()
    }
}

impl Mul<Multivector> for Rational {
    type Output = Multivector;

    fn mul(self, rhs: Multivector) -> Multivector {
        rhs.scale(self)
    }
}

impl Mul<&Multivector> for Rational {
    type Output = Multivector;

    fn mul(self, rhs: &Multivector) -> Multivector {
        rhs.scale(self)
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms().map(|(b, c)| (b, DisplayRational(c)))).finish()
    }
}

struct DisplayRational(Rational);

impl fmt::Debug for DisplayRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `p/q` with the denominator omitted when it is 1.
pub fn format_rational(r: &Rational) -> String {
    // Ratio's Display already omits a unit denominator
    r.to_string()
}

/// Serializes to the grade-keyed schema
/// `{"scalar":"p/q","vector":{"A":"p/q"},"bivector":{"A,B":"p/q"},
/// "trivector":{"A,B,C":"p/q"},"pseudoscalar":"p/q"}`; zero parts are omitted.
impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        let s = self.coefficient(Blade::SCALAR);
        if !s.is_zero() {
            map.serialize_entry("scalar", &format_rational(&s))?;
        }
        for (grade, key) in [(1, "vector"), (2, "bivector"), (3, "trivector")] {
            let part = GradePart { mv: self, grade };
            if part.entries().next().is_some() {
                map.serialize_entry(key, &part)?;
            }
        }
        let p = self.coefficient(Blade::PSEUDOSCALAR);
        if !p.is_zero() {
            map.serialize_entry("pseudoscalar", &format_rational(&p))?;
        }
        map.end()
    }
}

struct GradePart<'a> {
    mv: &'a Multivector,
    grade: usize,
}

impl GradePart<'_> {
    fn entries(&self) -> impl Iterator<Item = (String, String)> + '_ {
        self.mv
            .terms()
            .filter(|(b, _)| b.grade() == self.grade)
            .map(|(b, c)| {
                let key: Vec<String> = b.indices().iter().map(|i| i.to_string()).collect();
                (key.join(","), format_rational(&c))
            })
    }
}

impl Serialize for GradePart<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        for (k, v) in self.entries() {
            map.serialize_entry(&k, &v)?;
        }
        map.end()
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
    fn add_cancels_to_zero() {
        let [t] = indices([0]);
        let x = Multivector::gamma(t);
        let sum = &x + &x.scale(r(-1, 1));
        assert!(sum.is_zero());
        assert_eq!(sum, Multivector::zero());
        assert_eq!(sum.terms().count(), 0);
    }

    #[test]
    fn scale_halves() {
        let two = Multivector::scalar(r(2, 1));
        assert_eq!(two.scale(r(1, 2)), Multivector::one());
    }

    #[test]
    fn pruned_zero_equals_empty() {
        let [x] = indices([1]);
        let zeroed = Multivector::term(Blade::vector(x), r(0, 1));
        assert_eq!(zeroed, Multivector::zero());
    }

    #[test]
    fn generator_canonicalizes() {
        let [a, b, c] = indices([2, 0, 1]);
        assert_eq!(
            Multivector::gamma2(a, b),
            -Multivector::blade(Blade::ALL[6])
        );
        assert_eq!(Multivector::gamma3(a, b, c), Multivector::blade(Blade::ALL[11]));
        assert!(Multivector::gamma2(a, a).is_zero());
        assert_eq!(Multivector::generator(&[]).unwrap(), Multivector::one());
        assert_eq!(
            Multivector::generator(&indices([0, 1, 2, 3])),
            Err(AlgebraError::InvalidArity(4))
        );
    }

    #[test]
    fn json_schema() {
        let [t, x] = indices([0, 1]);
        let mv = Multivector::gamma2(t, x) - Multivector::one();
        assert_eq!(
            serde_json::to_string(&mv).unwrap(),
            r#"{"scalar":"-1","bivector":{"0,1":"1"}}"#
        );
        let mixed = Multivector::gamma(x).scale(r(1, 2)) + Multivector::pseudoscalar();
        assert_eq!(
            serde_json::to_string(&mixed).unwrap(),
            r#"{"vector":{"1":"1/2"},"pseudoscalar":"1"}"#
        );
        assert_eq!(serde_json::to_string(&Multivector::zero()).unwrap(), "{}");
    }

    #[test]
    fn checked_ops_detect_overflow() {
        let big = Multivector::scalar(Rational::from_integer(i64::MAX));
        assert!(big.checked_add(&big).is_none());
        assert!(big.checked_scale(r(2, 1)).is_none());
        assert_eq!(
            Multivector::one().checked_add(&Multivector::one()),
            Some(Multivector::scalar(r(2, 1)))
        );
    }
}
