//! Structured outcome of one inequality check.

use serde::{Deserialize, Deserializer, Serialize};
use serde_json::{Map, Value};

use crate::error::Result;
use crate::linalg::{self, HermitianMatrix, Tolerance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `LHS ⪯ RHS` in the Loewner order.
    Loewner,
    /// `lhs ≤ rhs` between real numbers.
    Scalar,
    /// Two predicates that must agree.
    Equivalence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Disagreement confined to the tolerance band around a tie.
    Boundary,
    HypothesisNotMet,
}

/// Result of evaluating one relation.
///
/// For Loewner relations `slack` is `λ_min(RHS − LHS)` and `lhs_summary` /
/// `rhs_summary` are the spectral norms of the two sides; `normalized_slack`
/// divides by `max(1, ‖LHS‖, ‖RHS‖)`. For scalar relations `slack` is
/// `(rhs − lhs) / max(1, |rhs|)` and both slack fields coincide.
///
/// `pass` covers the main relation and every non-informational entry of
/// `parts`. When the hypothesis is not met no pass/fail is emitted and the
/// numeric fields are NaN (serialized as `null`).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub case_id: String,
    pub hypothesis_met: bool,
    pub relation: Relation,
    #[serde(deserialize_with = "nan_if_null")]
    pub lhs_summary: f64,
    #[serde(deserialize_with = "nan_if_null")]
    pub rhs_summary: f64,
    #[serde(deserialize_with = "nan_if_null")]
    pub slack: f64,
    #[serde(deserialize_with = "nan_if_null")]
    pub normalized_slack: f64,
    pub pass: bool,
    pub status: Status,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<Verdict>,
}

fn nan_if_null<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
}

impl Verdict {
    fn base(case_id: &str, relation: Relation) -> Self {
        Self {
            case_id: case_id.to_string(),
            hypothesis_met: true,
            relation,
            lhs_summary: f64::NAN,
            rhs_summary: f64::NAN,
            slack: f64::NAN,
            normalized_slack: f64::NAN,
            pass: false,
            status: Status::HypothesisNotMet,
            informational: false,
            details: Map::new(),
            parts: Vec::new(),
        }
    }

    pub fn not_met(case_id: &str, relation: Relation, reason: impl Into<String>) -> Self {
        let mut v = Self::base(case_id, relation);
        v.hypothesis_met = false;
        v.details.insert("reason".into(), Value::String(reason.into()));
        v
    }

    /// `lhs ⪯ rhs`, passing when `λ_min(rhs − lhs) ≥ −tol · max(1, ‖lhs‖, ‖rhs‖)`.
    pub fn loewner(
        case_id: &str,
        lhs: &HermitianMatrix,
        rhs: &HermitianMatrix,
        tol: Tolerance,
    ) -> Result<Self> {
        lhs.check_same_dim(rhs)?;
        let lhs_norm = linalg::hermitian_norm(lhs)?;
        let rhs_norm = linalg::hermitian_norm(rhs)?;
        let slack = linalg::lambda_min(&rhs.sub(lhs))?;
        let scale = lhs_norm.max(rhs_norm).max(1.0);
        let mut v = Self::base(case_id, Relation::Loewner);
        v.lhs_summary = lhs_norm;
        v.rhs_summary = rhs_norm;
        v.slack = slack;
        v.normalized_slack = slack / scale;
        v.set_pass(slack >= -tol.rel * scale);
        Ok(v)
    }

    /// `lhs ≤ rhs` for reals.
    pub fn scalar(case_id: &str, lhs: f64, rhs: f64, tol: Tolerance) -> Self {
        let slack = (rhs - lhs) / rhs.abs().max(1.0);
        let mut v = Self::base(case_id, Relation::Scalar);
        v.lhs_summary = lhs;
        v.rhs_summary = rhs;
        v.slack = slack;
        v.normalized_slack = slack;
        v.set_pass(slack >= -tol.rel);
        v
    }

    /// Agreement of two predicates. `boundary` marks instances within the
    /// tolerance band of either predicate's tie, where disagreement is not a failure.
    pub fn equivalence(case_id: &str, left: bool, right: bool, boundary: bool, margin: f64) -> Self {
        let mut v = Self::base(case_id, Relation::Equivalence);
        v.lhs_summary = f64::from(u8::from(left));
        v.rhs_summary = f64::from(u8::from(right));
        v.slack = margin;
        v.normalized_slack = margin;
        v.hypothesis_met = true;
        if left == right {
            v.pass = true;
            v.status = Status::Pass;
        } else if boundary {
            v.pass = true;
            v.status = Status::Boundary;
        } else {
            v.pass = false;
            v.status = Status::Fail;
        }
        v.details.insert("left".into(), Value::Bool(left));
        v.details.insert("right".into(), Value::Bool(right));
        v
    }

    /// `value ≤ bound` with no extra tolerance; used for algebraic identity residuals.
    pub fn within(case_id: &str, value: f64, bound: f64) -> Self {
        let slack = (bound - value) / bound.abs().max(1.0);
        let mut v = Self::base(case_id, Relation::Scalar);
        v.lhs_summary = value;
        v.rhs_summary = bound;
        v.slack = slack;
        v.normalized_slack = slack;
        v.set_pass(value <= bound);
        v
    }

    /// `antecedent ⇒ consequent`; fails only on a counterexample.
    pub fn implication(case_id: &str, antecedent: bool, consequent: bool) -> Self {
        let mut v = Self::base(case_id, Relation::Equivalence);
        v.lhs_summary = f64::from(u8::from(antecedent));
        v.rhs_summary = f64::from(u8::from(consequent));
        v.slack = 0.0;
        v.normalized_slack = 0.0;
        v.set_pass(!antecedent || consequent);
        v
    }

    /// Every normative part must hold; headline numbers are copied from the
    /// tightest normative part. Informational parts ride along.
    pub fn conjunction(case_id: &str, parts: Vec<Verdict>) -> Self {
        let tightest = parts
            .iter()
            .filter(|p| !p.informational && p.hypothesis_met)
            .min_by(|x, y| x.normalized_slack.total_cmp(&y.normalized_slack));
        let mut v = match tightest {
            Some(t) => {
                let mut v = Self::base(case_id, t.relation);
                v.lhs_summary = t.lhs_summary;
                v.rhs_summary = t.rhs_summary;
                v.slack = t.slack;
                v.normalized_slack = t.normalized_slack;
                v
            }
            None => Self::base(case_id, Relation::Scalar),
        };
        v.set_pass(true);
        for p in parts {
            v = v.with_part(p);
        }
        v
    }

    fn set_pass(&mut self, pass: bool) {
        self.hypothesis_met = true;
        self.pass = pass;
        self.status = if pass { Status::Pass } else { Status::Fail };
    }

    pub fn with_detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    /// Adds a normative sub-verdict; a failing part fails the whole verdict.
    pub fn with_part(mut self, part: Verdict) -> Self {
        if self.hypothesis_met && part.hypothesis_met && !part.pass && !part.informational {
            self.pass = false;
            self.status = Status::Fail;
        }
        self.parts.push(part);
        self
    }

    /// Adds a sub-verdict that is reported but never affects `pass`.
    pub fn with_info(mut self, mut part: Verdict) -> Self {
        part.informational = true;
        self.parts.push(part);
        self
    }

    pub fn into_info(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn is_fail(&self) -> bool {
        self.hypothesis_met && !self.pass
    }

    /// Informational parts (at any depth) that did not hold.
    pub fn informational_failures(&self) -> usize {
        self.parts
            .iter()
            .map(|p| {
                let own = usize::from(p.informational && p.hypothesis_met && !p.pass);
                own + p.informational_failures()
            })
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serialization cannot fail")
    }
}
