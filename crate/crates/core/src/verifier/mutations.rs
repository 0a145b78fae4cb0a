use serde::{Deserialize, Serialize};

use super::{run, Case, GridSpec};
use crate::closed_forms::{IdentityId, Mutation};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationOutcome {
    pub mutation: Mutation,
    pub target: IdentityId,
    pub description: String,
    pub failed_cases: u64,
    pub minimal: Option<Case>,
}

impl MutationOutcome {
    pub fn caught(&self) -> bool {
        self.minimal.is_some()
    }
}

/// Runs the target identity of every mutation over `grid` with the fault
/// injected. A healthy grid catches every one.
pub fn mutation_sensitivity(grid: &GridSpec, jobs: usize) -> Result<Vec<MutationOutcome>> {
    Mutation::ALL
        .iter()
        .map(|&m| {
            let target = m.target();
            let report = run(&grid.clone().with_identities([target]), jobs, Some(m))?;
            let failure = report.failure(target);
            Ok(MutationOutcome {
                mutation: m,
                target,
                description: m.describe().to_string(),
                failed_cases: failure.map_or(0, |f| f.cases.len() as u64),
                minimal: failure.map(|f| f.minimal.clone()),
            })
        })
        .collect()
}
