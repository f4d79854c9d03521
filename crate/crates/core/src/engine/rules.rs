//! Right-hand sides of the generator product identities.
//!
//! Each function takes the left factor's indices followed by the right
//! factor's indices, in the order they are written on the left-hand side, and
//! accepts any index assignment (repeated or unsorted indices included).

use super::contraction::{
    bivector_contraction, double_trivector_contraction, scalar_contraction, trivector_contraction,
    vector_contraction,
};
use crate::algebra::{epsilon_pseudo, eta, Multivector, Rational, TetradIndex, ALL_RAISED};

type T = TetradIndex;

fn g1(a: T) -> Multivector {
    Multivector::gamma(a)
}

fn g2(a: T, b: T) -> Multivector {
    Multivector::gamma2(a, b)
}

fn g3(a: T, b: T, c: T) -> Multivector {
    Multivector::gamma3(a, b, c)
}

fn g5() -> Multivector {
    Multivector::pseudoscalar()
}

/// `γ^A γ^B = γ^{[AB]} + η^{AB}`
pub fn vector_vector(a: T, b: T) -> Multivector {
    g2(a, b) + Multivector::scalar(eta(a, b))
}

/// `γ^E γ^{[AB]} = γ^{[EAB]} + η^{EA} γ^B - η^{EB} γ^A`
pub fn vector_bivector(e: T, a: T, b: T) -> Multivector {
    let mut out = g3(e, a, b);
    out.add_scaled(eta(e, a), &g1(b));
    out.add_scaled(-eta(e, b), &g1(a));
    out
}

/// `γ^{[AB]} γ^E = γ^{[EAB]} - η^{EA} γ^B + η^{EB} γ^A`
pub fn bivector_vector(a: T, b: T, e: T) -> Multivector {
    let mut out = g3(e, a, b);
    out.add_scaled(-eta(e, a), &g1(b));
    out.add_scaled(eta(e, b), &g1(a));
    out
}

fn bivector_eta_terms(e: T, a: T, b: T, c: T) -> Multivector {
    let mut out = Multivector::zero();
    out.add_scaled(eta(e, a), &g2(b, c));
    out.add_scaled(eta(e, b), &g2(c, a));
    out.add_scaled(eta(e, c), &g2(a, b));
    out
}

/// `γ^E γ^{[ABC]} = -ε^{EABC} γ^(5) + η^{EA} γ^{[BC]} + η^{EB} γ^{[CA]} + η^{EC} γ^{[AB]}`
pub fn vector_trivector(e: T, a: T, b: T, c: T) -> Multivector {
    let mut out = bivector_eta_terms(e, a, b, c);
    out.add_scaled(-epsilon_pseudo(ALL_RAISED, [e, a, b, c]), &g5());
    out
}

/// `γ^{[ABC]} γ^E = ε^{EABC} γ^(5) + η^{EA} γ^{[BC]} + η^{EB} γ^{[CA]} + η^{EC} γ^{[AB]}`
pub fn trivector_vector(a: T, b: T, c: T, e: T) -> Multivector {
    let mut out = bivector_eta_terms(e, a, b, c);
    out.add_scaled(epsilon_pseudo(ALL_RAISED, [e, a, b, c]), &g5());
    out
}

/// `γ^E γ^(5) = (1/3!) ε^E_{ABC} γ^{[ABC]}`
pub fn vector_pseudoscalar(e: T) -> Multivector {
    let mut out = Multivector::zero();
    for a in TetradIndex::ALL {
        for b in TetradIndex::ALL {
            for c in TetradIndex::ALL {
                let eps = epsilon_pseudo([true, false, false, false], [e, a, b, c]);
                out.add_scaled(eps / 6, &g3(a, b, c));
            }
        }
    }
    out
}

/// `γ^{[AB]} γ^{[DE]} = -ε^{DEAB} γ^(5) + ε^{AB}_{[F|}^H ε^{DE}_{|G]H} γ^{[FG]}
/// + η^{BD} η^{AE} - η^{DA} η^{BE}`
pub fn bivector_bivector(a: T, b: T, d: T, e: T) -> Multivector {
    let mut out = bivector_contraction(a, b, d, e);
    out.add_scaled(-epsilon_pseudo(ALL_RAISED, [d, e, a, b]), &g5());
    out += Multivector::scalar(eta(b, d) * eta(a, e) - eta(d, a) * eta(b, e));
    out
}

/// `γ^{[DE]} γ^{[ABC]} = (1/3) ε^{[D|ABC} ε^{|E]}_{FGH} γ^{[FGH]} + ε^{ABCF} ε^{DE}_{HF} γ^H`
pub fn bivector_trivector(d: T, e: T, a: T, b: T, c: T) -> Multivector {
    trivector_contraction(d, e, a, b, c) + vector_contraction(a, b, c, d, e)
}

/// `γ^{[ABC]} γ^{[DE]} = -(1/3) ε^{[D|ABC} ε^{|E]}_{FGH} γ^{[FGH]} + ε^{ABCF} ε^{DE}_{HF} γ^H`
pub fn trivector_bivector(a: T, b: T, c: T, d: T, e: T) -> Multivector {
    vector_contraction(a, b, c, d, e) - trivector_contraction(d, e, a, b, c)
}

/// `γ^{[DE]} γ^(5) = (1/2) ε^{ED}_{AB} γ^{[AB]}`
pub fn bivector_pseudoscalar(d: T, e: T) -> Multivector {
    let mut out = Multivector::zero();
    for a in TetradIndex::ALL {
        for b in TetradIndex::ALL {
            let eps = epsilon_pseudo([true, true, false, false], [e, d, a, b]);
            out.add_scaled(eps / 2, &g2(a, b));
        }
    }
    out
}

/// `γ^{[HFG]} γ^{[ABC]} = ε^{ABC}_{[D|} ε^{HFG}_{|E]} γ^{[ED]} + ε^{HFGD} ε^{ABC}_D`
pub fn trivector_trivector(h: T, f: T, g: T, a: T, b: T, c: T) -> Multivector {
    double_trivector_contraction(a, b, c, h, f, g)
        + Multivector::scalar(scalar_contraction(h, f, g, a, b, c))
}

/// `γ^{[HFG]} γ^(5) = ε_A^{HFG} γ^A`
pub fn trivector_pseudoscalar(h: T, f: T, g: T) -> Multivector {
    let mut out = Multivector::zero();
    for a in TetradIndex::ALL {
        let eps = epsilon_pseudo([false, true, true, true], [a, h, f, g]);
        out.add_scaled(eps, &g1(a));
    }
    out
}

/// `γ^(5) γ^(5) = -I`
pub fn pseudoscalar_square() -> Multivector {
    Multivector::scalar(Rational::from_integer(-1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::index::indices;
    use crate::algebra::Blade;

    #[test]
    fn gamma_zero_squares_to_one() {
        let [t] = indices([0]);
        assert_eq!(vector_vector(t, t), Multivector::one());
    }

    #[test]
    fn gamma_zero_times_pseudoscalar() {
        let [t] = indices([0]);
        assert_eq!(vector_pseudoscalar(t), Multivector::blade(Blade::ALL[14]));
    }

    #[test]
    fn time_bivector_squares_to_one() {
        let [t, x] = indices([0, 1]);
        assert_eq!(bivector_bivector(t, x, t, x), Multivector::one());
    }

    #[test]
    fn mirrored_vector_bivector_rules_share_trivector() {
        let [e, a, b] = indices([0, 0, 1]);
        // γ^0 γ^{[01]} = γ^1 and γ^{[01]} γ^0 = -γ^1
        assert_eq!(vector_bivector(e, a, b), Multivector::gamma(b));
        assert_eq!(bivector_vector(a, b, e), -Multivector::gamma(b));
    }
}
