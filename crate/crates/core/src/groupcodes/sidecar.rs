use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{build_group, reversible_ordering, FiniteGroup, GroupSpec, Ordering};

/// Companion record stored next to a code file: enough to rebuild the
/// element ordering that produced the code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingSidecar {
    pub group: GroupSpec,
    pub involution: Option<usize>,
    pub reps: Vec<usize>,
    pub ordering: Vec<usize>,
}

impl OrderingSidecar {
    pub fn reversible(group: GroupSpec, involution: usize, reps: Vec<usize>, ordering: &Ordering) -> OrderingSidecar {
        OrderingSidecar { group, involution: Some(involution), reps, ordering: ordering.elements().to_vec() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<OrderingSidecar> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
    }

    /// Rebuilds the group and ordering, checking the stored listing.
    pub fn rebuild(&self) -> Result<(FiniteGroup, Ordering)> {
        let group = build_group(&self.group)?;
        let ordering = match self.involution {
            Some(g) => reversible_ordering(&group, g, &self.reps)?,
            None => Ordering::custom(self.ordering.clone())?,
        };
        if ordering.elements() != self.ordering.as_slice() {
            return Err(Error::BadReps("stored ordering does not match the representatives".into()));
        }
        Ok((group, ordering))
    }
}
