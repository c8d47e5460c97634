//! Verdict types shared by the reports.

use serde::Serialize;

use crate::homology::{Certificate, ExtTorTable, Vanishing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    PassUpToBound,
    Fail,
}

/// One labelled condition of a definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub label: String,
    pub status: Status,
    /// first nonvanishing degree, for homological conditions
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    /// computed dimensions, for Ext/Tor tables and map shapes
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub note: String,
}

impl Condition {
    pub fn new(label: &str, status: Status, note: impl Into<String>) -> Self {
        Condition {
            label: label.into(),
            status,
            degree: None,
            dims: Vec::new(),
            certificate: None,
            note: note.into(),
        }
    }

    pub fn from_bool(label: &str, ok: bool, note: impl Into<String>) -> Self {
        Condition::new(label, if ok { Status::Pass } else { Status::Fail }, note)
    }

    /// Vanishing of a table in degrees `>= 1`.
    pub fn from_table(label: &str, table: &ExtTorTable, what: &str) -> Self {
        let (status, degree, note) = match table.vanishing() {
            Vanishing::Certified => (Status::Pass, None, format!("{what} vanishes in all degrees >= 1")),
            Vanishing::UpToBound => (
                Status::PassUpToBound,
                None,
                format!("{what} vanishes in degrees 1..={}", table.bound),
            ),
            Vanishing::FailsAt { degree } => (
                Status::Fail,
                Some(degree),
                format!("{what} in degree {degree} has dimension {}", table.dims[degree]),
            ),
        };
        Condition {
            label: label.into(),
            status,
            degree,
            dims: table.dims.clone(),
            certificate: (table.certificate != Certificate::None).then_some(table.certificate),
            note,
        }
    }

    pub fn with_dims(mut self, dims: Vec<usize>) -> Self {
        self.dims = dims;
        self
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Overall {
    Yes,
    YesUpToBound,
    /// every failing label, in definition order
    No { failing: Vec<String> },
}

impl Overall {
    /// `No` with the failing labels, else `YesUpToBound` if anything was bound-limited.
    pub fn combine(conditions: &[Condition]) -> Overall {
        let failing: Vec<String> = conditions.iter().filter(|c| c.failed()).map(|c| c.label.clone()).collect();
        if !failing.is_empty() {
            return Overall::No { failing };
        }
        if conditions.iter().any(|c| c.status == Status::PassUpToBound) {
            Overall::YesUpToBound
        } else {
            Overall::Yes
        }
    }

    pub fn is_yes(&self) -> bool {
        !matches!(self, Overall::No { .. })
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Overall::Yes)
    }
}
