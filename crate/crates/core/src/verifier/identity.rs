use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::engine::ProductRule;

/// The epsilon-contraction expansions that accompany the product identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AuxiliaryIdentity {
    /// `ε^{AB}_{[F|}^H ε^{DE}_{|G]H} γ^{[FG]}` in terms of `η` and bivectors.
    BivectorContraction,
    /// `(1/3) ε^{[D|ABC} ε^{|E]}_{FGH} γ^{[FGH]}` in terms of `η` and trivectors.
    TrivectorContraction,
    /// `ε^{ABCF} ε^{DE}_{HF} γ^H` in terms of `η η` and vectors.
    VectorContraction,
    /// `ε^{ABC}_{[D|} ε^{HFG}_{|E]} γ^{[ED]}` in terms of `η η` and bivectors.
    DoubleTrivectorContraction,
    /// `ε^{HFGD} ε^{ABC}_D` as a cubic polynomial in `η`.
    ScalarContraction,
}

impl AuxiliaryIdentity {
    pub const ALL: [AuxiliaryIdentity; 5] = [
        AuxiliaryIdentity::BivectorContraction,
        AuxiliaryIdentity::TrivectorContraction,
        AuxiliaryIdentity::VectorContraction,
        AuxiliaryIdentity::DoubleTrivectorContraction,
        AuxiliaryIdentity::ScalarContraction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AuxiliaryIdentity::BivectorContraction => "bivector-contraction",
            AuxiliaryIdentity::TrivectorContraction => "trivector-contraction",
            AuxiliaryIdentity::VectorContraction => "vector-contraction",
            AuxiliaryIdentity::DoubleTrivectorContraction => "double-trivector-contraction",
            AuxiliaryIdentity::ScalarContraction => "scalar-contraction",
        }
    }

    pub fn free_indices(self) -> usize {
        match self {
            AuxiliaryIdentity::BivectorContraction => 4,
            AuxiliaryIdentity::TrivectorContraction | AuxiliaryIdentity::VectorContraction => 5,
            AuxiliaryIdentity::DoubleTrivectorContraction | AuxiliaryIdentity::ScalarContraction => 6,
        }
    }
}

/// Everything the verifier knows how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Product(ProductRule),
    Auxiliary(AuxiliaryIdentity),
    /// `γ^{[EABC]} = -ε^{EABC} γ^(5)`
    FourBlade,
    /// `ϵ^{ABCD} ϵ_{EFGH}` equals the Kronecker-delta determinant.
    EpsilonDeterminant,
    /// Engine against oracle on all 256 ordered blade pairs.
    Table,
}

impl IdentityId {
    /// All identities in reporting order.
    pub fn all() -> Vec<IdentityId> {
        let mut ids: Vec<IdentityId> = ProductRule::ALL.into_iter().map(IdentityId::Product).collect();
        ids.extend(AuxiliaryIdentity::ALL.into_iter().map(IdentityId::Auxiliary));
        ids.extend([IdentityId::FourBlade, IdentityId::EpsilonDeterminant, IdentityId::Table]);
        ids
    }

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Product(rule) => rule.name(),
            IdentityId::Auxiliary(aux) => aux.name(),
            IdentityId::FourBlade => "four-blade",
            IdentityId::EpsilonDeterminant => "epsilon-determinant",
            IdentityId::Table => "table",
        }
    }

    /// Number of free indices enumerated; `None` for the blade-pair table.
    pub fn free_indices(self) -> Option<usize> {
        match self {
            IdentityId::Product(rule) => Some(rule.arity()),
            IdentityId::Auxiliary(aux) => Some(aux.free_indices()),
            IdentityId::FourBlade => Some(4),
            IdentityId::EpsilonDeterminant => Some(8),
            IdentityId::Table => None,
        }
    }

    pub fn case_count(self) -> usize {
        match self.free_indices() {
            Some(n) => 4usize.pow(n as u32),
            None => 256,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::all()
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_parse() {
        let all = IdentityId::all();
        assert_eq!(all.len(), 13 + 5 + 3);
        for id in &all {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), *id);
        }
        let mut names: Vec<_> = all.iter().map(|i| i.name()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), all.len());
    }

    #[test]
    fn case_counts() {
        use ProductRule::*;
        assert_eq!(IdentityId::Product(VectorVector).case_count(), 16);
        assert_eq!(IdentityId::Product(VectorBivector).case_count(), 64);
        assert_eq!(IdentityId::Product(BivectorBivector).case_count(), 256);
        assert_eq!(IdentityId::Product(BivectorTrivector).case_count(), 1024);
        assert_eq!(IdentityId::Product(TrivectorTrivector).case_count(), 4096);
        assert_eq!(IdentityId::Product(VectorPseudoscalar).case_count(), 4);
        assert_eq!(IdentityId::Product(PseudoscalarSquare).case_count(), 1);
        assert_eq!(IdentityId::EpsilonDeterminant.case_count(), 65536);
        assert_eq!(IdentityId::Table.case_count(), 256);
    }
}
