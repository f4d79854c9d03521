use std::fmt;

use super::AlgebraError;

/// A flat (tetrad) index in `{0, 1, 2, 3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TetradIndex(u8);

impl TetradIndex {
    pub const ALL: [TetradIndex; 4] = [Self(0), Self(1), Self(2), Self(3)];

    pub fn new(value: u8) -> Result<Self, AlgebraError> {
        if value < 4 {
            Ok(Self(value))
        } else {
            Err(AlgebraError::IndexOutOfRange(i64::from(value)))
        }
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn usize(self) -> usize {
        self.0 as usize
    }

    pub(crate) const fn bit(self) -> u8 {
        1 << self.0
    }
}

impl TryFrom<i64> for TetradIndex {
    type Error = AlgebraError;

    fn try_from(value: i64) -> Result<Self, Self::Error> {
        if (0..4).contains(&value) {
            Ok(Self(value as u8))
        } else {
            Err(AlgebraError::IndexOutOfRange(value))
        }
    }
}

impl fmt::Display for TetradIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Builds an index array from raw values, panicking on values outside `0..4`.
///
/// Intended for literals in tests and tables.
pub fn indices<const N: usize>(values: [u8; N]) -> [TetradIndex; N] {
    values.map(|v| TetradIndex::new(v).expect("tetrad index literal out of range"))
}

/// Result of bringing an antisymmetrized index tuple into ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    /// Parity of the sorting permutation, or 0 when an index repeats.
    pub sign: i8,
    /// The sorted tuple; empty when `sign == 0`.
    pub indices: Vec<TetradIndex>,
}

/// Sorts an antisymmetrized index tuple, tracking the permutation parity.
///
/// Repeated indices annihilate the bracket, which is reported as sign 0.
pub fn canonicalize_indices(indices: &[TetradIndex]) -> Result<Canonical, AlgebraError> {
    if indices.is_empty() || indices.len() > 4 {
        return Err(AlgebraError::InvalidArity(indices.len()));
    }
    let mut sorted = indices.to_vec();
    let mut sign = 1i8;
    // insertion sort; each adjacent swap is one transposition
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] > sorted[j] {
            sorted.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(Canonical {
            sign: 0,
            indices: Vec::new(),
        });
    }
    Ok(Canonical {
        sign,
        indices: sorted,
    })
}

/// Every assignment of `N` tetrad indices in lexicographic order.
pub fn assignments<const N: usize>() -> impl Iterator<Item = [TetradIndex; N]> {
    (0..4usize.pow(N as u32)).map(assignment::<N>)
}

/// The `case`-th assignment of `N` indices, most significant index first.
pub fn assignment<const N: usize>(case: usize) -> [TetradIndex; N] {
    let mut out = [TetradIndex(0); N];
    let mut rest = case;
    for slot in out.iter_mut().rev() {
        *slot = TetradIndex((rest % 4) as u8);
        rest /= 4;
    }
    out
}

/// The `case`-th assignment of `n` indices, for arities known only at run time.
pub fn assignment_vec(case: usize, n: usize) -> Vec<TetradIndex> {
    let mut out = vec![TetradIndex(0); n];
    let mut rest = case;
    for slot in out.iter_mut().rev() {
        *slot = TetradIndex((rest % 4) as u8);
        rest /= 4;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(values: &[u8]) -> (i8, Vec<u8>) {
        let idx: Vec<_> = values.iter().map(|&v| TetradIndex::new(v).unwrap()).collect();
        let c = canonicalize_indices(&idx).unwrap();
        (c.sign, c.indices.iter().map(|i| i.value()).collect())
    }

    #[test]
    fn single_transposition_flips_sign() {
        assert_eq!(canon(&[2, 1]), (-1, vec![1, 2]));
    }

    #[test]
    fn repeated_index_vanishes() {
        assert_eq!(canon(&[1, 1]), (0, vec![]));
        assert_eq!(canon(&[0, 3, 2, 3]), (0, vec![]));
    }

    #[test]
    fn cyclic_permutation_is_even() {
        assert_eq!(canon(&[3, 1, 2]), (1, vec![1, 2, 3]));
        assert_eq!(canon(&[3, 2, 1, 0]), (1, vec![0, 1, 2, 3]));
    }

    #[test]
    fn arity_is_checked() {
        assert_eq!(
            canonicalize_indices(&[]),
            Err(AlgebraError::InvalidArity(0))
        );
        let five = indices([0, 1, 2, 3, 0]);
        assert_eq!(
            canonicalize_indices(&five),
            Err(AlgebraError::InvalidArity(5))
        );
    }

    #[test]
    fn out_of_range_index_rejected() {
        assert!(TetradIndex::new(4).is_err());
        assert!(TetradIndex::try_from(-1i64).is_err());
        assert_eq!(TetradIndex::try_from(3i64).unwrap().value(), 3);
    }

    #[test]
    fn assignments_are_lexicographic() {
        let all: Vec<[TetradIndex; 2]> = assignments::<2>().collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all[0], indices([0, 0]));
        assert_eq!(all[1], indices([0, 1]));
        assert_eq!(all[4], indices([1, 0]));
        assert_eq!(all[15], indices([3, 3]));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (case, a) in all.iter().enumerate() {
            assert_eq!(assignment_vec(case, 2), a.to_vec());
        }
    }
}
