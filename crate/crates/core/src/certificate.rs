//! Verdict records shared by the certificate engines.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertifiedTrue,
    CertifiedFalse,
    Undecided,
}

impl Verdict {
    /// Conjunction: false dominates, then undecided.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (CertifiedFalse, _) | (_, CertifiedFalse) => CertifiedFalse,
            (Undecided, _) | (_, Undecided) => Undecided,
            _ => CertifiedTrue,
        }
    }

    /// Disjunction: true dominates, then undecided.
    pub fn or(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (CertifiedTrue, _) | (_, CertifiedTrue) => CertifiedTrue,
            (Undecided, _) | (_, Undecided) => Undecided,
            _ => CertifiedFalse,
        }
    }

    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::CertifiedTrue
        } else {
            Verdict::CertifiedFalse
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::CertifiedTrue
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Method {
    ExactRational,
    Interval {
        precision: u32,
    },
    /// Conjunction of sub-certificates with their own methods.
    Composite,
}

/// One comparison in a transcript. Integers and rationals are decimal
/// strings; interval endpoints are written as `m*2^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub label: String,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
    pub holds: bool,
}

impl Step {
    pub fn new(
        label: impl Into<String>,
        lhs: impl ToString,
        relation: &str,
        rhs: impl ToString,
        holds: bool,
    ) -> Self {
        Step {
            label: label.into(),
            lhs: lhs.to_string(),
            relation: relation.to_string(),
            rhs: rhs.to_string(),
            holds,
        }
    }
}

/// A machine-checkable verdict: what was claimed, for which parameters, the
/// outcome, and the comparisons that produced it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub params: Value,
    pub verdict: Verdict,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default)]
    pub transcript: Vec<Step>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Certificate>,
}

impl Certificate {
    pub fn new(claim: impl Into<String>, params: Value, verdict: Verdict, method: Method) -> Self {
        Certificate {
            claim: claim.into(),
            params,
            verdict,
            method,
            witness: None,
            transcript: Vec::new(),
            children: Vec::new(),
        }
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_step(mut self, step: Step) -> Self {
        self.transcript.push(step);
        self
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Verdict::*;

    #[test]
    fn verdict_algebra() {
        assert_eq!(CertifiedTrue.and(Undecided), Undecided);
        assert_eq!(CertifiedFalse.and(Undecided), CertifiedFalse);
        assert_eq!(CertifiedFalse.or(Undecided), Undecided);
        assert_eq!(CertifiedTrue.or(CertifiedFalse), CertifiedTrue);
    }

    #[test]
    fn serializes_kebab_case() {
        let c = Certificate::new(
            "x",
            serde_json::json!({}),
            CertifiedTrue,
            Method::Interval { precision: 64 },
        );
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.contains("\"certified-true\""));
        assert!(s.contains("\"kind\":\"interval\""));
        let back: Certificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
