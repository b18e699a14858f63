//! The 95 weighted K3 hypersurfaces: exhaustive search, the published
//! tables, and a comparison between the two.

mod diff;
mod emit;
mod golden;
mod record;
mod search;

pub use diff::{
    diff, diff_with_seed, DiffReport, DiffStatus, DiffSummary, Field, FieldMismatch, Finding, LabelDiff,
    EXCEPTIONAL_RANK_BOUND,
};
pub use emit::{emit, emit_diff, parse_csv, table1_markdown, table2_markdown, Format, RecordRow, CSV_HEADER};
pub use golden::{golden_row, golden_table, label_of, GoldenRow};
pub use record::{analyze, compute_record, Analysis, SurfaceRecord};
pub use search::search;

use thiserror::Error;

use crate::instanton::InstantonError;
use crate::lattice::LatticeError;
use crate::singular::SingularError;

/// Default largest weight for the exhaustive search.
pub const DEFAULT_MAX_WEIGHT: u64 = 40;

#[derive(Debug, Error)]
pub enum ReidError {
    #[error("golden transcription: {0}")]
    Golden(String),
    #[error("record keys do not line up: {0}")]
    KeyMismatch(String),
    #[error("unknown output format {0:?} (expected csv, markdown or json)")]
    UnknownFormat(String),
    #[error("schema: {0}")]
    Schema(String),
    #[error(transparent)]
    Instanton(#[from] InstantonError),
    #[error(transparent)]
    Singular(#[from] SingularError),
    #[error(transparent)]
    Arithmetic(#[from] LatticeError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl ReidError {
    /// Whether the error comes from a failed consistency check in the math core.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            ReidError::Singular(SingularError::Inconsistent(_))
                | ReidError::Instanton(InstantonError::Singular(SingularError::Inconsistent(_)))
                | ReidError::Instanton(InstantonError::Inconsistent(_))
                | ReidError::Golden(_)
        )
    }
}

/// Records for every golden row, computed from the weights alone.
pub fn compute_golden_records() -> Result<Vec<SurfaceRecord>, ReidError> {
    golden_table()
        .iter()
        .map(|g| compute_record(&g.weights).map_err(ReidError::from))
        .collect()
}
