use std::fmt::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::diff::{DiffReport, DiffStatus, Field, Finding};
use super::record::SurfaceRecord;
use super::ReidError;

pub const CSV_HEADER: &str = "label,w0,w1,w2,w3,d,singularities,deg_num,deg_den,irreducibility,dim";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
    Json,
}

impl FromStr for Format {
    type Err = ReidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            "json" => Ok(Format::Json),
            other => Err(ReidError::UnknownFormat(other.to_string())),
        }
    }
}

/// One record in the flat exchange schema shared by CSV and JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordRow {
    pub label: Option<u32>,
    pub w0: u64,
    pub w1: u64,
    pub w2: u64,
    pub w3: u64,
    pub d: u64,
    pub singularities: String,
    pub deg_num: i64,
    pub deg_den: i64,
    pub irreducibility: String,
    pub dim: i64,
}

impl From<&SurfaceRecord> for RecordRow {
    fn from(r: &SurfaceRecord) -> Self {
        let [w0, w1, w2, w3] = r.weights.weights();
        RecordRow {
            label: r.label,
            w0,
            w1,
            w2,
            w3,
            d: r.weights.degree(),
            singularities: r.data.to_string(),
            deg_num: r.invariants.degree.numerator(),
            deg_den: r.invariants.degree.denominator(),
            irreducibility: r.invariants.certificate.status.label().to_string(),
            dim: r.invariants.dim.value,
        }
    }
}

impl RecordRow {
    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.label.map(|l| l.to_string()).unwrap_or_default(),
            self.w0,
            self.w1,
            self.w2,
            self.w3,
            self.d,
            self.singularities,
            self.deg_num,
            self.deg_den,
            self.irreducibility,
            self.dim
        )
    }
}

pub fn parse_csv(text: &str) -> Result<Vec<RecordRow>, ReidError> {
    let mut lines = text.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err(ReidError::Schema("missing or wrong CSV header".into()));
    }
    lines
        .filter(|l| !l.is_empty())
        .map(|line| {
            let bad = |what: &str| ReidError::Schema(format!("{what} in {line:?}"));
            let f: Vec<&str> = line.split(',').collect();
            if f.len() != 11 {
                return Err(bad("expected 11 fields"));
            }
            let int = |s: &str| s.parse::<i64>().map_err(|_| bad("bad integer"));
            let nat = |s: &str| s.parse::<u64>().map_err(|_| bad("bad integer"));
            Ok(RecordRow {
                label: if f[0].is_empty() {
                    None
                } else {
                    Some(f[0].parse().map_err(|_| bad("bad label"))?)
                },
                w0: nat(f[1])?,
                w1: nat(f[2])?,
                w2: nat(f[3])?,
                w3: nat(f[4])?,
                d: nat(f[5])?,
                singularities: f[6].to_string(),
                deg_num: int(f[7])?,
                deg_den: int(f[8])?,
                irreducibility: f[9].to_string(),
                dim: int(f[10])?,
            })
        })
        .collect()
}

fn markdown_records(records: &[SurfaceRecord]) -> String {
    let mut out = String::from("| label | w | d | singularities | deg | irreducibility | dim |\n");
    out.push_str("|---|---|---|---|---|---|---|\n");
    for r in records {
        let sing = if r.data.is_empty() {
            "—".to_string()
        } else {
            r.data.to_string()
        };
        let label = r.label.map(|l| l.to_string()).unwrap_or_else(|| "—".into());
        writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            label,
            r.weights,
            r.weights.degree(),
            sing,
            r.invariants.degree,
            r.invariants.certificate.status.label(),
            r.invariants.dim.value
        )
        .unwrap();
    }
    out
}

pub fn emit(records: &[SurfaceRecord], format: Format) -> Result<String, ReidError> {
    let rows: Vec<RecordRow> = records.iter().map(RecordRow::from).collect();
    Ok(match format {
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for row in &rows {
                out.push_str(&row.to_csv_line());
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows)?;
            s.push('\n');
            s
        }
        Format::Markdown => markdown_records(records),
    })
}

/// The first published table: surface and moduli dimension per label.
pub fn table1_markdown(records: &[SurfaceRecord]) -> String {
    let mut out = String::from("| Label | X_d ⊂ P(w) | dim_C M* |\n|---|---|---|\n");
    for r in records {
        let label = r.label.map(|l| l.to_string()).unwrap_or_else(|| "—".into());
        writeln!(
            out,
            "| {} | X_{} ⊂ P{} | {} |",
            label,
            r.weights.degree(),
            r.weights,
            r.invariants.dim.value
        )
        .unwrap();
    }
    out
}

/// The second published table: singularities and connection degree per label.
pub fn table2_markdown(records: &[SurfaceRecord]) -> String {
    let mut out = String::from("| Label | Singularities of X_d | deg(∇*) |\n|---|---|---|\n");
    for r in records {
        let label = r.label.map(|l| l.to_string()).unwrap_or_else(|| "—".into());
        let sing = if r.data.is_empty() {
            "no singularities".to_string()
        } else {
            r.data
                .entries()
                .iter()
                .map(|&(m, c)| {
                    if c > 1 {
                        format!("{c}×A{}", m - 1)
                    } else {
                        format!("A{}", m - 1)
                    }
                })
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(out, "| {} | {} | {} |", label, sing, r.invariants.degree).unwrap();
    }
    out
}

fn field_name(f: Field) -> &'static str {
    match f {
        Field::Singularities => "singularities",
        Field::Degree => "degree",
        Field::Dimension => "dimension",
    }
}

fn describe(f: &Finding) -> String {
    match f {
        Finding::PrintedDimensionInconsistent {
            printed,
            from_printed_singularities,
        } => {
            format!("printed dim {printed} but its own singularities give {from_printed_singularities}")
        }
        Finding::PrintedDegreeInconsistent {
            printed,
            from_printed_singularities,
        } => {
            format!("printed degree {printed} but its own singularities give {from_printed_singularities}")
        }
        Finding::RankBoundExceeded { rank, bound } => {
            format!("printed singularities need {rank} exceptional curves (> {bound})")
        }
        Finding::OracleDisagreement {
            order,
            printed_count,
            oracle_count,
        } => {
            format!("printed {printed_count} point(s) of order {order}, finite-field count gives {oracle_count}")
        }
    }
}

pub fn emit_diff(report: &DiffReport, format: Format) -> Result<String, ReidError> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("label,weights,status,fields,findings\n");
            for r in &report.rows {
                let status = if r.is_match() { "match" } else { "mismatch" };
                let fields: Vec<&str> = r.mismatched_fields().into_iter().map(field_name).collect();
                let findings: Vec<String> = r.findings.iter().map(|f| describe(f).replace(',', ";")).collect();
                writeln!(
                    out,
                    "{},\"{}\",{},{},{}",
                    r.label,
                    r.weights,
                    status,
                    fields.join("+"),
                    findings.join(" | ")
                )
                .unwrap();
            }
            out
        }
        Format::Markdown => {
            let s = &report.summary;
            let mut out = String::new();
            writeln!(out, "# Computed vs published\n").unwrap();
            writeln!(out, "- labels: {}", s.labels).unwrap();
            writeln!(out, "- matching on all fields: {}", s.matches).unwrap();
            writeln!(
                out,
                "- mismatching: {} (singularities {}, degree {}, dimension {})",
                s.mismatches, s.singularity_mismatches, s.degree_mismatches, s.dimension_mismatches
            )
            .unwrap();
            writeln!(
                out,
                "- published-row findings: dimension {}, degree {}, rank bound {}, finite-field count {}\n",
                s.printed_dimension_inconsistencies,
                s.printed_degree_inconsistencies,
                s.rank_bound_violations,
                s.oracle_disagreements
            )
            .unwrap();
            out.push_str("| label | w | status | details | findings |\n|---|---|---|---|---|\n");
            for r in &report.rows {
                let (status, details) = match &r.status {
                    DiffStatus::Match => ("match", String::new()),
                    DiffStatus::Mismatch(fields) => (
                        "mismatch",
                        fields
                            .iter()
                            .map(|f| {
                                format!(
                                    "{}: computed {} vs printed {}",
                                    field_name(f.field),
                                    f.computed,
                                    f.printed
                                )
                            })
                            .collect::<Vec<_>>()
                            .join("; "),
                    ),
                };
                let findings: Vec<String> = r.findings.iter().map(describe).collect();
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    r.label,
                    r.weights,
                    status,
                    details,
                    findings.join("; ")
                )
                .unwrap();
            }
            out
        }
    })
}
