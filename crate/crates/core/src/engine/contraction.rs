//! Products of two Levi-Civita pseudo-tensors contracted against generators.
//!
//! Dummy indices are summed explicitly over `0..4`. Antisymmetrization over
//! two indices carries weight 1/2.

use crate::algebra::levi_civita::epsilon_pseudo_int;
use crate::algebra::{Multivector, Rational, TetradIndex, ALL_RAISED};

const UP: bool = true;
const DN: bool = false;

fn eps(raised: [bool; 4], idx: [TetradIndex; 4]) -> i64 {
    i64::from(epsilon_pseudo_int(raised, idx))
}

const ALL: [TetradIndex; 4] = TetradIndex::ALL;

/// `ε^{AB}_{[F|}^{H} ε^{DE}_{|G]H} γ^{[FG]}`
pub fn bivector_contraction(
    a: TetradIndex,
    b: TetradIndex,
    d: TetradIndex,
    e: TetradIndex,
) -> Multivector {
    let left = |f, h| eps([UP, UP, DN, UP], [a, b, f, h]);
    let right = |g, h| eps([UP, UP, DN, DN], [d, e, g, h]);
    let mut out = Multivector::zero();
    for f in ALL {
        for g in ALL {
            let twice: i64 = ALL
                .iter()
                .map(|&h| left(f, h) * right(g, h) - left(g, h) * right(f, h))
                .sum();
            if twice != 0 {
                out.add_scaled(Rational::new(twice, 2), &Multivector::gamma2(f, g));
            }
        }
    }
    out
}

/// `(1/3) ε^{[D|ABC} ε^{|E]}_{FGH} γ^{[FGH]}`
pub fn trivector_contraction(
    d: TetradIndex,
    e: TetradIndex,
    a: TetradIndex,
    b: TetradIndex,
    c: TetradIndex,
) -> Multivector {
    let upper_d = eps(ALL_RAISED, [d, a, b, c]);
    let upper_e = eps(ALL_RAISED, [e, a, b, c]);
    let mut out = Multivector::zero();
    if upper_d == 0 && upper_e == 0 {
        return out;
    }
    for f in ALL {
        for g in ALL {
            for h in ALL {
                let twice = upper_d * eps([UP, DN, DN, DN], [e, f, g, h])
                    - upper_e * eps([UP, DN, DN, DN], [d, f, g, h]);
                if twice != 0 {
                    // 1/3 from the identity, 1/2 from the bracket
                    out.add_scaled(Rational::new(twice, 6), &Multivector::gamma3(f, g, h));
                }
            }
        }
    }
    out
}

/// `ε^{ABCF} ε^{DE}_{HF} γ^H`
pub fn vector_contraction(
    a: TetradIndex,
    b: TetradIndex,
    c: TetradIndex,
    d: TetradIndex,
    e: TetradIndex,
) -> Multivector {
    let mut out = Multivector::zero();
    for h in ALL {
        let coeff: i64 = ALL
            .iter()
            .map(|&f| eps(ALL_RAISED, [a, b, c, f]) * eps([UP, UP, DN, DN], [d, e, h, f]))
            .sum();
        if coeff != 0 {
            out.add_scaled(Rational::from_integer(coeff), &Multivector::gamma(h));
        }
    }
    out
}

/// `ε^{ABC}_{[D|} ε^{HFG}_{|E]} γ^{[ED]}`
pub fn double_trivector_contraction(
    a: TetradIndex,
    b: TetradIndex,
    c: TetradIndex,
    h: TetradIndex,
    f: TetradIndex,
    g: TetradIndex,
) -> Multivector {
    let left = |x| eps([UP, UP, UP, DN], [a, b, c, x]);
    let right = |x| eps([UP, UP, UP, DN], [h, f, g, x]);
    let mut out = Multivector::zero();
    for d in ALL {
        for e in ALL {
            let twice = left(d) * right(e) - left(e) * right(d);
            if twice != 0 {
                out.add_scaled(Rational::new(twice, 2), &Multivector::gamma2(e, d));
            }
        }
    }
    out
}

/// `ε^{HFGD} ε^{ABC}_D`
pub fn scalar_contraction(
    h: TetradIndex,
    f: TetradIndex,
    g: TetradIndex,
    a: TetradIndex,
    b: TetradIndex,
    c: TetradIndex,
) -> Rational {
    let sum: i64 = ALL
        .iter()
        .map(|&d| eps(ALL_RAISED, [h, f, g, d]) * eps([UP, UP, UP, DN], [a, b, c, d]))
        .sum();
    Rational::from_integer(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::index::indices;
    use crate::algebra::Blade;

    #[test]
    fn bivector_contraction_simple_case() {
        // ε^{01}_{[F|}^{H} ε^{02}_{|G]H} γ^{[FG]}: only the η^{DA} term survives,
        // η^{00} γ^{[EB]} = γ^{[21]} = -γ^{[12]}
        let [a, b, d, e] = indices([0, 1, 0, 2]);
        let expected = -Multivector::blade(Blade::ALL[8]);
        assert_eq!(bivector_contraction(a, b, d, e), expected);
    }

    #[test]
    fn scalar_contraction_matches_hand_value() {
        // ε^{012D} ε^{012}_D = ε^{0123} ε^{012}_3 = (-1)(η^00 η^11 η^22 ·1) = -1
        let [h, f, g] = indices([0, 1, 2]);
        assert_eq!(scalar_contraction(h, f, g, h, f, g), Rational::from_integer(-1));
    }

    #[test]
    fn contractions_vanish_on_repeated_indices() {
        let [x, y, z] = indices([1, 1, 2]);
        assert!(trivector_contraction(z, y, x, y, z).is_zero());
        assert!(vector_contraction(x, y, z, x, z).is_zero());
        assert!(double_trivector_contraction(x, y, z, x, y, z).is_zero());
    }
}
