use std::cmp::Ordering;
use std::fmt;

use super::{AlgebraError, TetradIndex};

/// One of the 16 canonical generators: `I`, `γ^A`, `γ^{[AB]}`, `γ^{[ABC]}`
/// with ascending indices, or `γ^(5)`.
///
/// Stored as a bit set of the indices it carries. The grade-4 element is the
/// ordered product `γ^0 γ^1 γ^2 γ^3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u8);

/// Bit sets in canonical order: grade ascending, then lexicographic indices.
const CANONICAL_MASKS: [u8; 16] = [
    0b0000, // I
    0b0001, 0b0010, 0b0100, 0b1000, // γ^0 .. γ^3
    0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100, // 01 02 03 12 13 23
    0b0111, 0b1011, 0b1101, 0b1110, // 012 013 023 123
    0b1111, // γ^(5)
];

const fn ordinal_table() -> [u8; 16] {
    let mut table = [0u8; 16];
    let mut i = 0;
    while i < 16 {
        table[CANONICAL_MASKS[i] as usize] = i as u8;
        i += 1;
    }
    table
}

const ORDINAL_OF_MASK: [u8; 16] = ordinal_table();

impl Blade {
    pub const SCALAR: Blade = Blade(0);
    pub const PSEUDOSCALAR: Blade = Blade(0b1111);

    /// All blades in canonical order.
    pub const ALL: [Blade; 16] = {
        let mut all = [Blade(0); 16];
        let mut i = 0;
        while i < 16 {
            all[i] = Blade(CANONICAL_MASKS[i]);
            i += 1;
        }
        all
    };

    pub fn vector(a: TetradIndex) -> Self {
        Blade(a.bit())
    }

    /// Blade for a strictly ascending index tuple of length 0..=4.
    pub fn from_ascending(indices: &[TetradIndex]) -> Result<Self, AlgebraError> {
        if indices.len() > 4 {
            return Err(AlgebraError::InvalidArity(indices.len()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AlgebraError::NotAscending);
        }
        Ok(Blade(indices.iter().fold(0, |m, i| m | i.bit())))
    }

    pub fn from_ordinal(ordinal: usize) -> Option<Self> {
        CANONICAL_MASKS.get(ordinal).map(|&m| Blade(m))
    }

    /// Position in the canonical order, `0..16`.
    pub fn ordinal(self) -> usize {
        usize::from(ORDINAL_OF_MASK[usize::from(self.0)])
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> Vec<TetradIndex> {
        TetradIndex::ALL
            .into_iter()
            .filter(|i| self.0 & i.bit() != 0)
            .collect()
    }

    pub fn blades_of_grade(grade: usize) -> impl Iterator<Item = Blade> {
        Self::ALL.into_iter().filter(move |b| b.grade() == grade)
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ordinal().cmp(&other.ordinal())
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Expression-language spelling: `1`, `g(0)`, `g(0,1)`, `g(0,1,2)`, `g5`.
impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.grade() {
            0 => write!(f, "1"),
            4 => write!(f, "g5"),
            _ => {
                let idx: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
                write!(f, "g({})", idx.join(","))
            }
        }
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Blade({self})")
    }
}
