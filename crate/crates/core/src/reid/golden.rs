use std::sync::OnceLock;

use serde::Serialize;

use super::ReidError;
use crate::lattice::{Rational, WeightVector};
use crate::singular::SingularityData;

const TRANSCRIPTION: &str = include_str!("../../data/reid95.tsv");

/// One published row: the weights and moduli dimension from the first
/// table, the singularity list and connection degree from the second.
/// Printed text is kept next to the parsed values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenRow {
    pub label: u32,
    pub weights: WeightVector,
    pub printed_dim: i64,
    pub printed_singularities: SingularityData,
    pub printed_singularities_text: String,
    pub printed_degree: Rational,
    pub printed_degree_text: String,
}

fn parse_row(line_no: usize, line: &str) -> Result<GoldenRow, ReidError> {
    let bad = |why: &str| ReidError::Golden(format!("line {line_no}: {why}"));
    let fields: Vec<&str> = line.split('\t').collect();
    let [label, d, weights, dim, sing, deg] = fields[..] else {
        return Err(bad("expected 6 tab-separated fields"));
    };
    let label = label.parse::<u32>().map_err(|_| bad("label"))?;
    let d = d.parse::<u64>().map_err(|_| bad("degree"))?;
    let raw: Vec<i64> = weights
        .split(',')
        .map(|x| x.parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad("weights"))?;
    let raw: [i64; 4] = raw.try_into().map_err(|_| bad("expected 4 weights"))?;
    let weights = WeightVector::normalize(raw).map_err(|e| bad(&e.to_string()))?;
    if weights.weights().map(|x| x as i64) != raw {
        return Err(bad("weights not ascending"));
    }
    if weights.degree() != d {
        return Err(bad("printed degree is not the sum of the weights"));
    }
    Ok(GoldenRow {
        label,
        weights,
        printed_dim: dim.parse().map_err(|_| bad("dimension"))?,
        printed_singularities: SingularityData::parse_printed(sing).map_err(|e| bad(&e.to_string()))?,
        printed_singularities_text: sing.to_string(),
        printed_degree: deg
            .parse()
            .map_err(|e: crate::lattice::LatticeError| bad(&e.to_string()))?,
        printed_degree_text: deg.to_string(),
    })
}

fn parse(text: &str) -> Result<Vec<GoldenRow>, ReidError> {
    let rows: Vec<GoldenRow> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty())
        .map(|(n, l)| parse_row(n + 1, l))
        .collect::<Result<_, _>>()?;
    let labels: Vec<u32> = rows.iter().map(|r| r.label).collect();
    if labels != (1..=95).collect::<Vec<u32>>() {
        return Err(ReidError::Golden(
            "labels must run 1..=95 exactly once, in order".into(),
        ));
    }
    Ok(rows)
}

/// The 95 published rows, in label order.
pub fn golden_table() -> &'static [GoldenRow] {
    static TABLE: OnceLock<Vec<GoldenRow>> = OnceLock::new();
    TABLE.get_or_init(|| parse(TRANSCRIPTION).expect("embedded transcription is well-formed"))
}

pub fn golden_row(label: u32) -> Option<&'static GoldenRow> {
    golden_table().get(label.checked_sub(1)? as usize)
}

pub fn label_of(w: &WeightVector) -> Option<u32> {
    golden_table().iter().find(|r| &r.weights == w).map(|r| r.label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcription_shape() {
        let t = golden_table();
        assert_eq!(t.len(), 95);
        let mut ws: Vec<_> = t.iter().map(|r| r.weights).collect();
        ws.sort();
        ws.dedup();
        assert_eq!(ws.len(), 95);
    }

    #[test]
    fn spot_rows() {
        let r = golden_row(33).unwrap();
        assert_eq!(r.weights.weights(), [1, 4, 6, 11]);
        assert_eq!(r.printed_dim, 48);
        assert_eq!(r.printed_singularities.to_string(), "A1+A3+A5");
        assert_eq!(r.printed_degree, Rational::new(133, 12).unwrap());

        let r = golden_row(1).unwrap();
        assert_eq!((r.weights.weights(), r.printed_dim), ([1, 1, 1, 1], 90));
        assert!(r.printed_singularities.is_empty());
        assert_eq!(r.printed_degree, Rational::ZERO);

        let r = golden_row(79).unwrap();
        assert_eq!(r.weights.weights(), [4, 5, 7, 16]);
        assert_eq!(r.printed_dim, 0);
        assert_eq!(r.printed_singularities.to_string(), "2*A3+2*A4+A6");
        assert_eq!(r.printed_degree, Rational::new(1677, 70).unwrap());

        let r = golden_row(84).unwrap();
        assert_eq!(r.printed_degree_text, "1411/210");
        let r = golden_row(31).unwrap();
        assert_eq!(r.printed_degree_text, "110/10");
        assert_eq!(r.printed_degree, Rational::from_integer(11));

        assert!(golden_row(0).is_none());
        assert!(golden_row(96).is_none());
        assert_eq!(label_of(&WeightVector::normalize([25, 7, 10, 8]).unwrap()), Some(95));
    }

    #[test]
    fn malformed_transcription_rejected() {
        assert!(parse("1\t5\t1,1,1,1\t90\t-\t0").is_err());
        assert!(parse("1\t4\t1,1,1\t90\t-\t0").is_err());
        assert!(parse("1\t4\t1,1,1,1\t90\t-\t0").is_err()); // only one label
        assert!(parse_row(1, "1\t4\t1,1,1,1\t90\t-\t0").is_ok());
        assert!(parse_row(1, "1\t6\t3,1,1,1\t90\t-\t0").is_err());
    }
}
