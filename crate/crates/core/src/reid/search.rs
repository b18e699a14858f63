use rayon::prelude::*;

use crate::hypersurface::k3_candidate;
use crate::lattice::WeightVector;

/// All ascending weight vectors with largest weight at most `max_weight`
/// whose general anticanonical hypersurface is a well-formed quasi-smooth K3.
/// Output is sorted lexicographically regardless of scheduling.
pub fn search(max_weight: u64) -> Vec<WeightVector> {
    let mut found: Vec<WeightVector> = (1..=max_weight)
        .into_par_iter()
        .flat_map_iter(|a| {
            (a..=max_weight).flat_map(move |b| {
                (b..=max_weight).flat_map(move |c| {
                    (c..=max_weight).filter_map(move |e| {
                        let w = WeightVector::normalize([a as i64, b as i64, c as i64, e as i64]).ok()?;
                        k3_candidate(&w).then_some(w)
                    })
                })
            })
        })
        .collect();
    found.sort();
    found
}
