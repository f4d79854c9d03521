//! Exhaustive checking of the product identities.
//!
//! For every assignment of an identity's free indices the left-hand side is
//! realized with explicit matrices and decomposed by the oracle, the
//! right-hand side is produced by the engine, and any difference is recorded
//! with its index assignment. Cases run in parallel; reports list
//! counterexamples in lexicographic order of the assignment.

mod identity;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::index::assignment_vec;
use crate::algebra::{epsilon_det_product, epsilon_symbol, eta, Blade, Multivector, Rational, TetradIndex};
use crate::engine::contraction::{
    bivector_contraction, double_trivector_contraction, scalar_contraction, trivector_contraction,
    vector_contraction,
};
use crate::engine::{four_blade_reduce, Engine, ProductRule};
use crate::oracle::{ExactComplexMatrix, OracleError, Representation, RepresentationName};

pub use identity::{AuxiliaryIdentity, IdentityId};

/// One failing case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Free-index values; blade ordinals for the table check.
    pub indices: Vec<u8>,
    /// Human-readable description of the case when the indices alone are not.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub engine: Multivector,
    pub oracle: Multivector,
}

/// Outcome of checking one identity in one representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub representation: RepresentationName,
    pub cases_checked: u64,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl IdentityReport {
    fn new(identity: IdentityId, representation: RepresentationName, cases: usize, counterexamples: Vec<Counterexample>) -> Self {
        Self {
            identity,
            representation,
            cases_checked: cases as u64,
            passed: counterexamples.is_empty(),
            counterexamples,
        }
    }

    /// `PASS vector-vector [standard] 16 cases`
    pub fn summary_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {} [{}] {} cases",
            self.identity, self.representation, self.cases_checked
        );
        if !self.passed {
            line.push_str(&format!(", {} counterexamples", self.counterexamples.len()));
        }
        line
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Serializes a report list as a JSON array.
pub fn reports_to_json(reports: &[IdentityReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn verify_identity(id: IdentityId, rep: &Representation) -> IdentityReport {
    verify_identity_with(Engine::global(), id, rep)
}

pub fn verify_identity_with(engine: &Engine, id: IdentityId, rep: &Representation) -> IdentityReport {
    let cases = id.case_count();
    let counterexamples: Vec<Counterexample> = (0..cases)
        .into_par_iter()
        .filter_map(|case| check_case(engine, id, rep, case))
        .collect();
    IdentityReport::new(id, rep.name(), cases, counterexamples)
}

pub fn verify_all(rep: &Representation) -> Vec<IdentityReport> {
    verify_all_with(Engine::global(), rep)
}

pub fn verify_all_with(engine: &Engine, rep: &Representation) -> Vec<IdentityReport> {
    verify_selected(engine, &IdentityId::all(), rep)
}

pub fn verify_selected(engine: &Engine, ids: &[IdentityId], rep: &Representation) -> Vec<IdentityReport> {
    ids.iter().map(|&id| verify_identity_with(engine, id, rep)).collect()
}

pub fn verify_table(rep: &Representation) -> IdentityReport {
    verify_identity(IdentityId::Table, rep)
}

/// Total number of cases a full run checks.
pub fn total_cases() -> u64 {
    IdentityId::all().iter().map(|id| id.case_count() as u64).sum()
}

fn check_case(engine: &Engine, id: IdentityId, rep: &Representation, case: usize) -> Option<Counterexample> {
    let idx = match id.free_indices() {
        Some(n) => assignment_vec(case, n),
        None => Vec::new(),
    };
    let labelled = |engine_value: Multivector, oracle: Result<Multivector, OracleError>, label: Option<String>| {
        let (oracle_value, case) = match oracle {
            Ok(v) if v == engine_value => return None,
            Ok(v) => (v, label),
            Err(e) => (Multivector::zero(), Some(format!("oracle error: {e}"))),
        };
        Some(Counterexample {
            indices: idx.iter().map(|i| i.value()).collect(),
            case,
            engine: engine_value,
            oracle: oracle_value,
        })
    };
    match id {
        IdentityId::Product(rule) => {
            let engine_value = engine.rule_rhs(rule, &idx).expect("assignment length is the rule arity");
            let direct = product_lhs(rep, rule, &idx, false);
            if let Some(cx) = labelled(engine_value.clone(), direct, None) {
                return Some(cx);
            }
            // identities also stating the value of the reversed product
            if let Some(sign) = mirror_sign(rule) {
                let reversed = product_lhs(rep, rule, &idx, true).map(|m| m.scale(Rational::from_integer(sign)));
                return labelled(engine_value, reversed, Some("reversed product".to_string()));
            }
            None
        }
        IdentityId::Auxiliary(aux) => {
            let engine_value = auxiliary_lhs(aux, &idx);
            let oracle = auxiliary_rhs_matrix(rep, aux, &idx).and_then(|m| rep.decompose(&m));
            labelled(engine_value, oracle, None)
        }
        IdentityId::FourBlade => {
            let engine_value = four_blade_reduce(idx[0], idx[1], idx[2], idx[3]);
            let oracle = rep.antisymmetrized(&idx).and_then(|m| rep.decompose(&m));
            labelled(engine_value, oracle, None)
        }
        IdentityId::EpsilonDeterminant => {
            let upper = [idx[0], idx[1], idx[2], idx[3]];
            let lower = [idx[4], idx[5], idx[6], idx[7]];
            let det = Multivector::scalar(Rational::from_integer(epsilon_det_product(upper, lower)));
            let symbols = i64::from(epsilon_symbol(upper)) * i64::from(epsilon_symbol(lower));
            labelled(det, Ok(Multivector::scalar(Rational::from_integer(symbols))), None)
        }
        IdentityId::Table => {
            let (a, b) = (Blade::ALL[case / 16], Blade::ALL[case % 16]);
            let engine_value = engine.blade_product(a, b).clone();
            let oracle = rep.oracle_blade_product(a, b);
            labelled(engine_value, oracle, Some(format!("{a} * {b}"))).map(|mut cx| {
                cx.indices = vec![a.ordinal() as u8, b.ordinal() as u8];
                cx
            })
        }
    }
}

/// Sign with which the reversed product equals the same right-hand side,
/// for the identities that state both orders.
fn mirror_sign(rule: ProductRule) -> Option<i64> {
    match rule {
        ProductRule::VectorPseudoscalar | ProductRule::TrivectorPseudoscalar => Some(-1),
        ProductRule::BivectorPseudoscalar => Some(1),
        _ => None,
    }
}

fn operand_matrix(rep: &Representation, grade: usize, idx: &[TetradIndex]) -> Result<ExactComplexMatrix, OracleError> {
    if grade == 4 {
        Ok(rep.blade_matrix(Blade::PSEUDOSCALAR).clone())
    } else {
        rep.antisymmetrized(idx)
    }
}

/// Left-hand side of a product identity through matrices.
fn product_lhs(rep: &Representation, rule: ProductRule, idx: &[TetradIndex], reversed: bool) -> Result<Multivector, OracleError> {
    let grades = rule.grades();
    let split = if grades.left == 4 { 0 } else { grades.left };
    let left = operand_matrix(rep, grades.left, &idx[..split])?;
    let right = operand_matrix(rep, grades.right, &idx[split..])?;
    let product = if reversed { &right * &left } else { &left * &right };
    rep.decompose(&product)
}

/// Epsilon-contraction side of an auxiliary identity, evaluated by the engine.
fn auxiliary_lhs(aux: AuxiliaryIdentity, i: &[TetradIndex]) -> Multivector {
    match aux {
        // free indices A B D E
        AuxiliaryIdentity::BivectorContraction => bivector_contraction(i[0], i[1], i[2], i[3]),
        // D E A B C
        AuxiliaryIdentity::TrivectorContraction => trivector_contraction(i[0], i[1], i[2], i[3], i[4]),
        // A B C D E
        AuxiliaryIdentity::VectorContraction => vector_contraction(i[0], i[1], i[2], i[3], i[4]),
        // A B C H F G
        AuxiliaryIdentity::DoubleTrivectorContraction => {
            double_trivector_contraction(i[0], i[1], i[2], i[3], i[4], i[5])
        }
        // H F G A B C
        AuxiliaryIdentity::ScalarContraction => {
            Multivector::scalar(scalar_contraction(i[0], i[1], i[2], i[3], i[4], i[5]))
        }
    }
}

/// Metric-expansion side of an auxiliary identity, realized as a matrix from
/// raw (non-canonicalized) antisymmetrized generator products.
fn auxiliary_rhs_matrix(rep: &Representation, aux: AuxiliaryIdentity, i: &[TetradIndex]) -> Result<ExactComplexMatrix, OracleError> {
    let mut acc = ExactComplexMatrix::zero();
    let mut add = |coeff: Rational, gens: &[TetradIndex]| -> Result<(), OracleError> {
        if coeff != Rational::from_integer(0) {
            acc = &acc + &rep.antisymmetrized(gens)?.scale_rational(coeff);
        }
        Ok(())
    };
    match aux {
        AuxiliaryIdentity::BivectorContraction => {
            let (a, b, d, e) = (i[0], i[1], i[2], i[3]);
            add(eta(e, a), &[b, d])?;
            add(eta(e, b), &[d, a])?;
            add(eta(d, a), &[e, b])?;
            add(eta(d, b), &[a, e])?;
        }
        AuxiliaryIdentity::TrivectorContraction => {
            let (d, e, a, b, c) = (i[0], i[1], i[2], i[3], i[4]);
            add(eta(e, a), &[d, b, c])?;
            add(eta(d, a), &[e, c, b])?;
            add(eta(e, c), &[d, a, b])?;
            add(eta(d, c), &[a, e, b])?;
            add(eta(d, b), &[e, a, c])?;
            add(eta(e, b), &[d, c, a])?;
        }
        AuxiliaryIdentity::VectorContraction => {
            let (a, b, c, d, e) = (i[0], i[1], i[2], i[3], i[4]);
            add(eta(d, b) * eta(e, a) - eta(d, a) * eta(e, b), &[c])?;
            add(eta(d, a) * eta(e, c) - eta(d, c) * eta(e, a), &[b])?;
            add(eta(d, c) * eta(e, b) - eta(d, b) * eta(e, c), &[a])?;
        }
        AuxiliaryIdentity::DoubleTrivectorContraction => {
            let (a, b, c, h, f, g) = (i[0], i[1], i[2], i[3], i[4], i[5]);
            add(eta(h, c) * eta(b, f) - eta(c, f) * eta(h, b), &[g, a])?;
            add(eta(h, c) * eta(b, g) - eta(c, g) * eta(h, b), &[a, f])?;
            add(eta(c, g) * eta(b, f) - eta(c, f) * eta(b, g), &[a, h])?;
            add(eta(a, g) * eta(h, b) - eta(h, a) * eta(b, g), &[c, f])?;
            add(eta(a, f) * eta(h, b) - eta(h, a) * eta(b, f), &[g, c])?;
            add(eta(a, f) * eta(b, g) - eta(a, g) * eta(b, f), &[c, h])?;
            add(eta(c, g) * eta(h, a) - eta(h, c) * eta(a, g), &[b, f])?;
            add(eta(c, f) * eta(h, a) - eta(h, c) * eta(a, f), &[g, b])?;
            add(eta(c, f) * eta(a, g) - eta(c, g) * eta(a, f), &[b, h])?;
        }
        AuxiliaryIdentity::ScalarContraction => {
            let (h, f, g, a, b, c) = (i[0], i[1], i[2], i[3], i[4], i[5]);
            let value = eta(a, h) * (eta(b, g) * eta(c, f) - eta(b, f) * eta(c, g))
                + eta(a, g) * (eta(b, f) * eta(c, h) - eta(b, h) * eta(c, f))
                + eta(a, f) * (eta(b, h) * eta(c, g) - eta(b, g) * eta(c, h));
            add(value, &[])?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_vector_passes_with_sixteen_cases() {
        let report = verify_identity(IdentityId::Product(ProductRule::VectorVector), Representation::standard());
        assert!(report.passed, "{report:?}");
        assert_eq!(report.cases_checked, 16);
        assert!(report.counterexamples.is_empty());
    }

    #[test]
    fn sign_flip_is_caught_with_sorted_counterexamples() {
        let faulty = Engine::with_sign_flip(ProductRule::VectorVector);
        let report = verify_identity_with(&faulty, IdentityId::Product(ProductRule::VectorVector), Representation::standard());
        assert!(!report.passed);
        // every assignment gives a nonzero product, so every case fails
        assert_eq!(report.counterexamples.len(), 16);
        assert_eq!(report.counterexamples[0].indices, vec![0, 0]);
        let order: Vec<_> = report.counterexamples.iter().map(|c| c.indices.clone()).collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
    }

    #[test]
    fn table_fault_names_blade_pair() {
        let faulty = Engine::with_sign_flip(ProductRule::BivectorPseudoscalar);
        let report = verify_identity_with(&faulty, IdentityId::Table, Representation::chiral());
        assert!(!report.passed);
        let first = &report.counterexamples[0];
        assert_eq!(first.case.as_deref(), Some("g(0,1) * g5"));
        assert_eq!(first.indices, vec![5, 15]);
        // γ^(5) γ^{[DE]} reuses the same rule, so it fails too
        assert!(report.counterexamples.iter().any(|c| c.case.as_deref() == Some("g5 * g(0,1)")));
    }

    #[test]
    fn empty_selection_is_empty() {
        assert!(verify_selected(Engine::global(), &[], Representation::standard()).is_empty());
    }

    #[test]
    fn report_json_shape() {
        let faulty = Engine::with_sign_flip(ProductRule::PseudoscalarSquare);
        let report = verify_identity_with(&faulty, IdentityId::Product(ProductRule::PseudoscalarSquare), Representation::standard());
        let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(value["identity"], "pseudoscalar-square");
        assert_eq!(value["representation"], "standard");
        assert_eq!(value["cases_checked"], 1);
        assert_eq!(value["passed"], false);
        assert_eq!(value["counterexamples"][0]["indices"], serde_json::json!([]));
        assert_eq!(value["counterexamples"][0]["engine"], serde_json::json!({"scalar": "1"}));
        assert_eq!(value["counterexamples"][0]["oracle"], serde_json::json!({"scalar": "-1"}));
    }

    #[test]
    fn summary_lines() {
        let report = verify_identity(IdentityId::Product(ProductRule::PseudoscalarSquare), Representation::chiral());
        assert_eq!(report.summary_line(), "PASS pseudoscalar-square [chiral] 1 cases");
    }
}
