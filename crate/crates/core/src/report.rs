//! Machine-readable verdicts for identity checks.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first coefficient at which the two sides disagree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub degree: u32,
    pub monomial: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub identity: String,
    pub anchor: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub compared: usize,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Accumulates coefficient comparisons and keeps the first mismatch.
pub struct Checker {
    identity: String,
    anchor: String,
    params: BTreeMap<String, String>,
    compared: usize,
    witness: Option<Witness>,
    note: Option<String>,
}

impl Checker {
    pub fn new(identity: &str, anchor: &str) -> Self {
        Checker {
            identity: identity.to_string(),
            anchor: anchor.to_string(),
            params: BTreeMap::new(),
            compared: 0,
            witness: None,
            note: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.note = Some(note.into());
    }

    pub fn compare<T: PartialEq + Display>(&mut self, degree: u32, monomial: impl Display, expected: &T, got: &T) -> bool {
        self.compared += 1;
        let ok = expected == got;
        if !ok && self.witness.is_none() {
            self.witness = Some(Witness {
                degree,
                monomial: monomial.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
        ok
    }

    /// Records a failure that is not a coefficient mismatch.
    pub fn fail(&mut self, degree: u32, monomial: impl Display, expected: impl Display, got: impl Display) {
        self.compared += 1;
        if self.witness.is_none() {
            self.witness = Some(Witness {
                degree,
                monomial: monomial.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    pub fn ok(&self) -> bool {
        self.witness.is_none()
    }

    pub fn finish(self) -> CheckReport {
        let status = if self.witness.is_none() { Status::Pass } else { Status::Fail };
        CheckReport {
            identity: self.identity,
            anchor: self.anchor,
            params: self.params,
            status,
            compared: self.compared,
            witness: self.witness,
            note: self.note,
        }
    }
}
