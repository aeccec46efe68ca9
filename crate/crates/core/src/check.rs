use std::fmt::Display;

/// Outcome of one verified identity: both sides rendered as text, and a
/// witness when the check is a membership decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub left: String,
    pub right: String,
    pub witness: Option<String>,
}

impl CheckRecord {
    pub fn equality<T: PartialEq + Display>(name: impl Into<String>, left: &T, right: &T) -> Self {
        Self {
            name: name.into(),
            passed: left == right,
            left: left.to_string(),
            right: right.to_string(),
            witness: None,
        }
    }

    /// Membership of `element` in the ideal described by `ideal`.
    pub fn membership(
        name: impl Into<String>,
        element: &impl Display,
        ideal: impl Into<String>,
        witness: Option<String>,
    ) -> Self {
        Self {
            name: name.into(),
            passed: witness.is_some(),
            left: element.to_string(),
            right: ideal.into(),
            witness,
        }
    }

    pub fn boolean(name: impl Into<String>, passed: bool, left: impl Into<String>, right: impl Into<String>) -> Self {
        Self { name: name.into(), passed, left: left.into(), right: right.into(), witness: None }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }
}
