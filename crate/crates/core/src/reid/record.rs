use serde::Serialize;

use super::golden::label_of;
use crate::hypersurface::Admissibility;
use crate::instanton::{invariants, InstantonError, InstantonInvariants};
use crate::lattice::WeightVector;
use crate::singular::{singularity_data, SingularityData};

/// Everything computed for one admissible weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceRecord {
    pub label: Option<u32>,
    pub weights: WeightVector,
    pub data: SingularityData,
    pub invariants: InstantonInvariants,
    pub admissibility: Admissibility,
}

impl SurfaceRecord {
    pub fn degree(&self) -> u64 {
        self.weights.degree()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Analysis {
    Candidate(SurfaceRecord),
    Rejected {
        weights: WeightVector,
        admissibility: Admissibility,
    },
}

/// Admissibility first; singularities and invariants only for candidates.
pub fn analyze(w: &WeightVector) -> Result<Analysis, InstantonError> {
    let admissibility = Admissibility::of(w);
    if !admissibility.is_candidate() {
        return Ok(Analysis::Rejected {
            weights: *w,
            admissibility,
        });
    }
    let data = singularity_data(w)?;
    let invariants = invariants(&data)?;
    Ok(Analysis::Candidate(SurfaceRecord {
        label: label_of(w),
        weights: *w,
        data,
        invariants,
        admissibility,
    }))
}

pub fn compute_record(w: &WeightVector) -> Result<SurfaceRecord, InstantonError> {
    match analyze(w)? {
        Analysis::Candidate(r) => Ok(r),
        Analysis::Rejected { weights, .. } => Err(InstantonError::Singular(
            crate::singular::SingularError::NotCandidate(weights),
        )),
    }
}
