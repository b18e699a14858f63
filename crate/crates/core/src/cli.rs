//! Command-line front end. [`run`] never touches the process; `main` only
//! forwards its result.

use std::fmt::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::instanton::certify;
use crate::lattice::WeightVector;
use crate::reid::{self, Analysis, Format, ReidError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "reid-k3",
    version,
    about = "Singularities and instanton moduli of weighted K3 hypersurfaces"
)]
struct Invocation {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze one weight vector.
    Analyze {
        /// Four positive integers, comma separated, in any order.
        #[arg(long)]
        weights: String,
        #[arg(long, default_value = "markdown", value_parser = parse_format)]
        format: Format,
    },
    /// Enumerate all admissible weight vectors up to a bound.
    Search {
        #[arg(long, default_value_t = reid::DEFAULT_MAX_WEIGHT, value_parser = clap::value_parser!(u64).range(1..))]
        max_weight: u64,
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: Format,
    },
    /// Recompute the published tables from the weights.
    Reproduce {
        #[arg(long, value_enum, default_value_t = TableSel::Both)]
        table: TableSel,
        #[arg(long, default_value = "markdown", value_parser = parse_format)]
        format: Format,
    },
    /// Compare computed rows with the published ones.
    Diff {
        #[arg(long, default_value = "markdown", value_parser = parse_format)]
        format: Format,
        /// Seed for the finite-field edge count.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableSel {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Both,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse::<Format>().map_err(|e| e.to_string())
}

/// Exit code and the text to print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Outcome {
        Outcome { code: EXIT_OK, output }
    }

    fn usage(msg: impl Into<String>) -> Outcome {
        Outcome {
            code: EXIT_USAGE,
            output: msg.into(),
        }
    }
}

pub fn parse_weights(s: &str) -> Result<WeightVector, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("expected 4 comma-separated weights, got {}", parts.len()));
    }
    let mut raw = [0i64; 4];
    for (slot, p) in raw.iter_mut().zip(&parts) {
        *slot = p.parse().map_err(|_| format!("cannot parse weight {p:?}"))?;
    }
    WeightVector::normalize(raw).map_err(|e| e.to_string())
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let invocation = match Invocation::try_parse_from(argv) {
        Ok(inv) => inv,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            return Outcome {
                code,
                output: e.render().to_string(),
            };
        }
    };
    let weights = match &invocation.command {
        Command::Analyze { weights, .. } => match parse_weights(weights) {
            Ok(w) => Some(w),
            Err(msg) => return Outcome::usage(format!("error: invalid --weights: {msg}\n")),
        },
        _ => None,
    };
    let result = match invocation.command {
        Command::Analyze { format, .. } => analyze(&weights.expect("parsed above"), format),
        Command::Search { max_weight, format } => search(max_weight, format),
        Command::Reproduce { table, format } => reproduce(table, format),
        Command::Diff { format, seed } => diff(format, seed),
    };
    finish(result)
}

fn finish(result: Result<String, ReidError>) -> Outcome {
    match result {
        Ok(text) => Outcome::ok(text),
        Err(e) => Outcome {
            code: EXIT_INTERNAL,
            output: format!("internal error: {e}\n"),
        },
    }
}

fn analyze(w: &WeightVector, format: Format) -> Result<String, ReidError> {
    let record = match reid::analyze(w)? {
        Analysis::Candidate(r) => r,
        Analysis::Rejected { weights, admissibility } => {
            let reason = admissibility.rejection_reason().unwrap_or("rejected");
            return Ok(match format {
                Format::Json => {
                    let v = json!({
                        "weights": weights.weights(),
                        "d": weights.degree(),
                        "k3_candidate": false,
                        "reason": reason,
                        "admissibility": admissibility,
                    });
                    format!("{}\n", serde_json::to_string_pretty(&v)?)
                }
                _ => format!(
                    "not a K3 candidate: {reason}\nweights {weights}, d = {}\nambient well-formed: {}\nhypersurface well-formed: {}\nquasi-smooth: {}\nlinear cone: {}\n",
                    weights.degree(),
                    admissibility.ambient_well_formed,
                    admissibility.hypersurface_well_formed,
                    admissibility.quasi_smooth,
                    admissibility.linear_cone,
                ),
            });
        }
    };
    match format {
        Format::Markdown => {
            let cert = certify(&record.weights, &record.data, &record.invariants)?;
            let mut out = String::new();
            if let Some(label) = record.label {
                writeln!(out, "label {label}").unwrap();
            }
            out.push_str(&cert.to_string());
            out.push('\n');
            out.push_str(&reid::emit(std::slice::from_ref(&record), Format::Markdown)?);
            Ok(out)
        }
        other => reid::emit(std::slice::from_ref(&record), other),
    }
}

fn search(max_weight: u64, format: Format) -> Result<String, ReidError> {
    let records = reid::search(max_weight)
        .iter()
        .map(|w| reid::compute_record(w).map_err(ReidError::from))
        .collect::<Result<Vec<_>, _>>()?;
    reid::emit(&records, format)
}

fn reproduce(table: TableSel, format: Format) -> Result<String, ReidError> {
    let records = reid::compute_golden_records()?;
    if format != Format::Markdown {
        return reid::emit(&records, format);
    }
    let mut out = String::new();
    if matches!(table, TableSel::One | TableSel::Both) {
        out.push_str("## Table 1: surfaces and dim_C M*\n\n");
        out.push_str(&reid::table1_markdown(&records));
    }
    if table == TableSel::Both {
        out.push('\n');
    }
    if matches!(table, TableSel::Two | TableSel::Both) {
        out.push_str("## Table 2: singularities and deg(∇*)\n\n");
        out.push_str(&reid::table2_markdown(&records));
    }
    Ok(out)
}

fn diff(format: Format, seed: u64) -> Result<String, ReidError> {
    let records = reid::compute_golden_records()?;
    let report = reid::diff_with_seed(&records, reid::golden_table(), seed)?;
    reid::emit_diff(&report, format)
}
