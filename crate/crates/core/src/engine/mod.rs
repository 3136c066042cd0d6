//! Containment checks, `(s, t)` sweeps, resurgence reports with provenance,
//! and the theorem-backed bounds, dispatch and combination rules.

pub mod bounds;
pub mod checks;
pub mod combine;
mod containment;
pub mod dispatch;
mod report;
mod sweep;

pub use containment::{check_containment, check_containment_with, CertificateEntry, ContainmentResult, ContainmentView};
pub use dispatch::{exact_cover_resurgence, exact_edge_resurgence, ideal_resurgence, ReportConfig};
pub use report::{CellRecord, Provenance, ResurgenceReport, Role, Tag, ValueReport, WitnessRecord};
pub use sweep::{sweep, SweepCell, SweepConfig, SweepResult};

use crate::ideal::DEFAULT_NODE_BUDGET;

/// Environment variable overriding the per-membership search budget.
pub const NODE_BUDGET_ENV: &str = "RESURGENCE_NODE_BUDGET";

/// The membership search budget: `RESURGENCE_NODE_BUDGET` when set to a
/// positive integer, else the library default.
pub fn node_budget() -> u64 {
    std::env::var(NODE_BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u64>().ok())
        .filter(|&b| b > 0)
        .unwrap_or(DEFAULT_NODE_BUDGET)
}
