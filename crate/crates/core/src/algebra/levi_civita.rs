//! The alternating symbol, the pseudo-tensor obtained from it, and the
//! Kronecker-delta determinant for products of two symbols.
//!
//! The symbol has `ϵ_{0123} = ϵ^{0123} = +1` regardless of index height. The
//! pseudo-tensor `ε` agrees with the symbol when all indices are lowered and
//! picks up a metric factor for every raised index, so the fully raised
//! `ε^{0123}` equals `-1`.

use super::{Metric, Rational, TetradIndex};

/// Index positions for the pseudo-tensor, `true` meaning raised.
pub type Positions = [bool; 4];

pub const ALL_LOWERED: Positions = [false; 4];
pub const ALL_RAISED: Positions = [true; 4];

/// Totally antisymmetric symbol with `ϵ(0,1,2,3) = +1`.
pub fn epsilon_symbol(idx: [TetradIndex; 4]) -> i8 {
    let mut sign = 1i8;
    for i in 0..4 {
        for j in (i + 1)..4 {
            match idx[i].cmp(&idx[j]) {
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    sign
}

/// Pseudo-tensor component with the flagged slots raised by the metric.
pub fn epsilon_pseudo(raised: Positions, idx: [TetradIndex; 4]) -> Rational {
    Rational::from_integer(i64::from(epsilon_pseudo_int(raised, idx)))
}

pub(crate) fn epsilon_pseudo_int(raised: Positions, idx: [TetradIndex; 4]) -> i8 {
    let mut value = epsilon_symbol(idx);
    if value == 0 {
        return 0;
    }
    for (up, i) in raised.iter().zip(idx) {
        if *up {
            value *= Metric::diagonal(i);
        }
    }
    value
}

/// `ϵ^{upper} ϵ_{lower}` evaluated as the determinant of the Kronecker-delta
/// matrix whose row `r` and column `c` hold `δ^{upper[c]}_{lower[r]}`.
///
/// The determinant is expanded over all 24 permutations directly, so this is
/// independent of [`epsilon_symbol`].
pub fn epsilon_det_product(upper: [TetradIndex; 4], lower: [TetradIndex; 4]) -> i64 {
    let delta = |r: usize, c: usize| i64::from(upper[c] == lower[r]);
    let mut det = 0i64;
    for perm in PERMUTATIONS_4 {
        let mut term = perm.1;
        for (r, &c) in perm.0.iter().enumerate() {
            term *= delta(r, c);
            if term == 0 {
                break;
            }
        }
        det += term;
    }
    det
}

/// All permutations of `0..4` with their signs.
const PERMUTATIONS_4: [([usize; 4], i64); 24] = [
    ([0, 1, 2, 3], 1),
    ([0, 1, 3, 2], -1),
    ([0, 2, 1, 3], -1),
    ([0, 2, 3, 1], 1),
    ([0, 3, 1, 2], 1),
    ([0, 3, 2, 1], -1),
    ([1, 0, 2, 3], -1),
    ([1, 0, 3, 2], 1),
    ([1, 2, 0, 3], 1),
    ([1, 2, 3, 0], -1),
    ([1, 3, 0, 2], -1),
    ([1, 3, 2, 0], 1),
    ([2, 0, 1, 3], 1),
    ([2, 0, 3, 1], -1),
    ([2, 1, 0, 3], -1),
    ([2, 1, 3, 0], 1),
    ([2, 3, 0, 1], 1),
    ([2, 3, 1, 0], -1),
    ([3, 0, 1, 2], -1),
    ([3, 0, 2, 1], 1),
    ([3, 1, 0, 2], 1),
    ([3, 1, 2, 0], -1),
    ([3, 2, 0, 1], -1),
    ([3, 2, 1, 0], 1),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::index::{assignments, indices};

    #[test]
    fn symbol_values() {
        assert_eq!(epsilon_symbol(indices([0, 1, 2, 3])), 1);
        assert_eq!(epsilon_symbol(indices([1, 0, 2, 3])), -1);
        assert_eq!(epsilon_symbol(indices([0, 1, 1, 3])), 0);
        assert_eq!(epsilon_symbol(indices([3, 2, 1, 0])), 1);
    }

    #[test]
    fn pseudo_tensor_positions() {
        let i = indices([0, 1, 2, 3]);
        assert_eq!(epsilon_pseudo(ALL_LOWERED, i), Rational::from_integer(1));
        assert_eq!(epsilon_pseudo(ALL_RAISED, i), Rational::from_integer(-1));
        assert_eq!(
            epsilon_pseudo([true, false, false, false], i),
            Rational::from_integer(1)
        );
        assert_eq!(
            epsilon_pseudo([false, true, false, false], i),
            Rational::from_integer(-1)
        );
    }

    #[test]
    fn fully_raised_is_minus_symbol() {
        for idx in assignments::<4>() {
            assert_eq!(
                epsilon_pseudo_int(ALL_RAISED, idx),
                -epsilon_symbol(idx),
                "{idx:?}"
            );
        }
    }

    #[test]
    fn determinant_examples() {
        let id = indices([0, 1, 2, 3]);
        assert_eq!(epsilon_det_product(id, id), 1);
        assert_eq!(epsilon_det_product(id, indices([1, 0, 2, 3])), -1);
        assert_eq!(epsilon_det_product(indices([0, 0, 2, 3]), id), 0);
    }

    #[test]
    fn permutation_table_signs() {
        for (perm, sign) in PERMUTATIONS_4 {
            let idx = perm.map(|p| TetradIndex::new(p as u8).unwrap());
            assert_eq!(i64::from(epsilon_symbol(idx)), sign);
        }
    }

    #[test]
    fn transposition_flips_sign() {
        for idx in assignments::<4>() {
            let s = epsilon_symbol(idx);
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let mut swapped = idx;
                    swapped.swap(i, j);
                    assert_eq!(epsilon_symbol(swapped), -s);
                }
            }
        }
    }
}
