//! Ledger-off coverage audit.
//!
//! Running a sweep with the ledger disabled lets the geometrically excluded
//! grid points survive. The audit diffs the surviving sets of the two runs
//! and checks that every extra survivor is matched by some ledger entry:
//! the numeric filters plus the ledger exactly partition the grid.

use super::ledger::Ledger;
use super::{enumerate, Family};
use crate::config::SweepConfig;
use std::collections::BTreeSet;

/// One family's audit outcome.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub family: Family,
    /// Extra survivors (candidate id, matching ledger id if any).
    pub ghosts: Vec<(String, Option<String>)>,
}

impl AuditReport {
    /// Ghost rows with no matching ledger entry; must be empty.
    pub fn unexplained(&self) -> Vec<&str> {
        self.ghosts
            .iter()
            .filter(|(_, m)| m.is_none())
            .map(|(id, _)| id.as_str())
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.ghosts.iter().all(|(_, m)| m.is_some())
    }
}

/// Runs the sweep twice (ledger on and off) and classifies the extra
/// surviving rows of the ledger-off run.
pub fn audit(family: Family, cfg: &SweepConfig, ledger: &Ledger) -> AuditReport {
    let with = enumerate(family, &SweepConfig { use_ledger: true, ..cfg.clone() }, ledger);
    let without = enumerate(family, &cfg.without_ledger(), ledger);

    let surviving_ids = |cands: &[super::CandidateCase]| -> BTreeSet<String> {
        cands.iter().filter(|c| c.verdict.is_surviving()).map(|c| c.id()).collect()
    };
    let on_ids = surviving_ids(&with);

    let mut ghosts = Vec::new();
    for cand in &without {
        if !cand.verdict.is_surviving() || on_ids.contains(&cand.id()) {
            continue;
        }
        let matched = ledger
            .first_match(family, &cand.params)
            .map(|e| e.id.clone());
        ghosts.push((cand.id(), matched));
    }
    AuditReport { family, ghosts }
}
