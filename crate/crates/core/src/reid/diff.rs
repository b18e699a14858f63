use std::collections::BTreeMap;

use serde::Serialize;

use super::golden::GoldenRow;
use super::record::SurfaceRecord;
use super::ReidError;
use crate::hypersurface::singular_edges;
use crate::instanton::{connection_degree, moduli_dimension};
use crate::lattice::Rational;
use crate::singular::{finite_field_edge_oracle, vertex_singularity, DEFAULT_PRIME};

/// Upper bound on `Σ count·(m − 1)` for a K3 surface: the exceptional curves
/// and a polarization are independent in a Picard lattice of rank at most 20.
pub const EXCEPTIONAL_RANK_BOUND: u64 = 19;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    Singularities,
    Degree,
    Dimension,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldMismatch {
    pub field: Field,
    pub computed: String,
    pub printed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "fields", rename_all = "snake_case")]
pub enum DiffStatus {
    Match,
    Mismatch(Vec<FieldMismatch>),
}

/// Diagnostics that implicate the printed row on its own terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Finding {
    /// Printed dimension disagrees with the dimension formula on the printed singularities.
    PrintedDimensionInconsistent {
        printed: i64,
        from_printed_singularities: i64,
    },
    /// Printed degree disagrees with the degree formula on the printed singularities.
    PrintedDegreeInconsistent {
        printed: String,
        from_printed_singularities: Rational,
    },
    /// Printed singularities need more exceptional curves than a K3 can carry.
    RankBoundExceeded { rank: u64, bound: u64 },
    /// Printed count of an edge order disagrees with the finite-field edge
    /// count plus the vertex points of that order.
    OracleDisagreement {
        order: u64,
        printed_count: u64,
        oracle_count: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelDiff {
    pub label: u32,
    pub weights: String,
    #[serde(flatten)]
    pub status: DiffStatus,
    pub findings: Vec<Finding>,
}

impl LabelDiff {
    pub fn is_match(&self) -> bool {
        self.status == DiffStatus::Match
    }

    pub fn mismatched_fields(&self) -> Vec<Field> {
        match &self.status {
            DiffStatus::Match => Vec::new(),
            DiffStatus::Mismatch(fields) => fields.iter().map(|f| f.field).collect(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DiffSummary {
    pub labels: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub singularity_mismatches: usize,
    pub degree_mismatches: usize,
    pub dimension_mismatches: usize,
    pub printed_dimension_inconsistencies: usize,
    pub printed_degree_inconsistencies: usize,
    pub rank_bound_violations: usize,
    pub oracle_disagreements: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub rows: Vec<LabelDiff>,
    pub summary: DiffSummary,
}

impl DiffReport {
    pub fn row(&self, label: u32) -> Option<&LabelDiff> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn mismatched_labels(&self) -> Vec<u32> {
        self.rows.iter().filter(|r| !r.is_match()).map(|r| r.label).collect()
    }

    pub fn labels_with<F: Fn(&Finding) -> bool>(&self, pred: F) -> Vec<u32> {
        self.rows
            .iter()
            .filter(|r| r.findings.iter().any(&pred))
            .map(|r| r.label)
            .collect()
    }
}

fn printed_findings(golden: &GoldenRow, oracle_seed: u64) -> Result<Vec<Finding>, ReidError> {
    let mut out = Vec::new();
    let printed = &golden.printed_singularities;

    let dim = moduli_dimension(printed).value;
    if dim != golden.printed_dim {
        out.push(Finding::PrintedDimensionInconsistent {
            printed: golden.printed_dim,
            from_printed_singularities: dim,
        });
    }
    let degree = connection_degree(printed)?;
    if degree != golden.printed_degree {
        out.push(Finding::PrintedDegreeInconsistent {
            printed: golden.printed_degree_text.clone(),
            from_printed_singularities: degree,
        });
    }
    let rank = printed.exceptional_rank();
    if rank > EXCEPTIONAL_RANK_BOUND {
        out.push(Finding::RankBoundExceeded {
            rank,
            bound: EXCEPTIONAL_RANK_BOUND,
        });
    }

    let w = &golden.weights;
    let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
    for (i, j, h) in singular_edges(w) {
        *by_order.entry(h).or_insert(0) += finite_field_edge_oracle(w, i, j, DEFAULT_PRIME, oracle_seed)?;
    }
    for (order, edge_points) in by_order {
        let mut expected = edge_points;
        for i in 0..4 {
            if let Some(v) = vertex_singularity(w, i)? {
                if v.order == order {
                    expected += v.count;
                }
            }
        }
        let printed_count = printed.count_of(order);
        if printed_count != expected {
            out.push(Finding::OracleDisagreement {
                order,
                printed_count,
                oracle_count: expected,
            });
        }
    }
    Ok(out)
}

fn compare(record: &SurfaceRecord, golden: &GoldenRow) -> DiffStatus {
    let mut fields = Vec::new();
    if record.data != golden.printed_singularities {
        fields.push(FieldMismatch {
            field: Field::Singularities,
            computed: record.data.to_string(),
            printed: golden.printed_singularities.to_string(),
        });
    }
    if record.invariants.degree != golden.printed_degree {
        fields.push(FieldMismatch {
            field: Field::Degree,
            computed: record.invariants.degree.to_string(),
            printed: golden.printed_degree_text.clone(),
        });
    }
    if record.invariants.dim.value != golden.printed_dim {
        fields.push(FieldMismatch {
            field: Field::Dimension,
            computed: record.invariants.dim.value.to_string(),
            printed: golden.printed_dim.to_string(),
        });
    }
    if fields.is_empty() {
        DiffStatus::Match
    } else {
        DiffStatus::Mismatch(fields)
    }
}

/// Compares computed records with the published rows, keyed by weights.
/// Golden data is only read.
pub fn diff(computed: &[SurfaceRecord], golden: &[GoldenRow]) -> Result<DiffReport, ReidError> {
    diff_with_seed(computed, golden, 0)
}

pub fn diff_with_seed(
    computed: &[SurfaceRecord],
    golden: &[GoldenRow],
    oracle_seed: u64,
) -> Result<DiffReport, ReidError> {
    let by_weights: BTreeMap<_, _> = computed.iter().map(|r| (r.weights, r)).collect();
    if by_weights.len() != computed.len() {
        return Err(ReidError::KeyMismatch(
            "duplicate weight vector among computed records".into(),
        ));
    }
    if computed.len() != golden.len() {
        return Err(ReidError::KeyMismatch(format!(
            "{} computed records against {} golden rows",
            computed.len(),
            golden.len()
        )));
    }

    let mut rows = Vec::with_capacity(golden.len());
    let mut summary = DiffSummary {
        labels: golden.len(),
        ..DiffSummary::default()
    };
    for g in golden {
        let record = by_weights
            .get(&g.weights)
            .ok_or_else(|| ReidError::KeyMismatch(format!("no computed record for label {} {}", g.label, g.weights)))?;
        let status = compare(record, g);
        let findings = printed_findings(g, oracle_seed)?;

        match &status {
            DiffStatus::Match => summary.matches += 1,
            DiffStatus::Mismatch(fields) => {
                summary.mismatches += 1;
                for f in fields {
                    match f.field {
                        Field::Singularities => summary.singularity_mismatches += 1,
                        Field::Degree => summary.degree_mismatches += 1,
                        Field::Dimension => summary.dimension_mismatches += 1,
                    }
                }
            }
        }
        for f in &findings {
            match f {
                Finding::PrintedDimensionInconsistent { .. } => summary.printed_dimension_inconsistencies += 1,
                Finding::PrintedDegreeInconsistent { .. } => summary.printed_degree_inconsistencies += 1,
                Finding::RankBoundExceeded { .. } => summary.rank_bound_violations += 1,
                Finding::OracleDisagreement { .. } => summary.oracle_disagreements += 1,
            }
        }
        rows.push(LabelDiff {
            label: g.label,
            weights: g.weights.to_string(),
            status,
            findings,
        });
    }
    Ok(DiffReport { rows, summary })
}
