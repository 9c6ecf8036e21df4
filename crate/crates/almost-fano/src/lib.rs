//! Exact-arithmetic enumeration of the numerical classification of smooth
//! almost Fano threefolds of Picard rank 2 whose anticanonical morphism is
//! divisorial.
//!
//! For each of the four extremal-contraction families (del Pezzo fibrations
//! over the line, conic bundles over the plane, blowups of a curve, blowups
//! of a point) the parameter space is a finite Diophantine grid. The crate
//! sweeps each grid, applies the elimination filters of the case analysis in
//! exact rational arithmetic, records the cases that are eliminated only by
//! geometric arguments in an explicit exclusion ledger, and reproduces the
//! four classification tables, which are shipped as golden data and checked
//! by a regression diff.
//!
//! The library is the primary interface; see the `examples/` directory for
//! one runnable program per capability (enumeration, verification against
//! the golden tables, case explanation, the ledger audit, and exports). A
//! thin `almost-fano` binary wraps the same entry points.

pub mod catalog;
pub mod chern;
pub mod config;
pub mod explain;
pub mod export;
pub mod invariants;
pub mod lattice;
pub mod rat;
pub mod sweep;

pub use catalog::{diff, load_golden, load_table, DiffReport, GoldenRow, TableId};
pub use config::SweepConfig;
pub use explain::explain;
pub use export::{export_candidates, export_golden, ExportFormat};
pub use invariants::{BLocus, DerivedInvariants};
pub use lattice::{
    blowup_curve_form, blowup_point_form, BasisId, DivisorClass, IntersectionForm, PointCase,
};
pub use rat::Q;
pub use sweep::{
    audit::{audit, AuditReport},
    enumerate,
    ledger::{Ledger, LedgerEntry},
    CandidateCase, Family, Verdict,
};

use std::path::PathBuf;

/// Locates the data directory (golden tables, ledger, default config):
/// the `ALMOST_FANO_DATA` environment variable, a `data/` directory under
/// the current directory, or the repository checkout relative to the crate.
pub fn default_data_dir() -> PathBuf {
    if let Ok(p) = std::env::var("ALMOST_FANO_DATA") {
        return PathBuf::from(p);
    }
    let cwd = PathBuf::from("data");
    if cwd.is_dir() {
        return cwd;
    }
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

/// Golden-table directory under the data root.
pub fn golden_dir(data: &std::path::Path) -> PathBuf {
    data.join("golden")
}

/// Ledger file under the data root.
pub fn ledger_path(data: &std::path::Path) -> PathBuf {
    data.join("ledger/ledger.txt")
}

/// Default sweep-configuration file under the data root.
pub fn config_path(data: &std::path::Path) -> PathBuf {
    data.join("config/default")
}
