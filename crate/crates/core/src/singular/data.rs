use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::SingularError;

/// Where on the ambient space a singular point of the surface sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularLocus {
    Vertex(usize),
    /// Points in the open edge `x_p = x_q = 0` for the two other coordinates.
    EdgeInterior(usize, usize),
}

/// `count` points of type `A_{order-1}` on one locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicSingularity {
    pub locus: SingularLocus,
    pub order: u64,
    pub count: u64,
}

impl CyclicSingularity {
    pub fn type_name(&self) -> String {
        format!("A{}", self.order - 1)
    }
}

/// Multiset of isotropy orders `{m_1, …, m_k}`, stored as ascending
/// `(order, count)` pairs with distinct orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SingularityData {
    entries: Vec<(u64, u64)>,
}

impl SingularityData {
    pub fn empty() -> SingularityData {
        SingularityData::default()
    }

    /// Merges repeated orders and drops zero counts. Orders below 2 are rejected.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Result<SingularityData, SingularError> {
        let mut merged = BTreeMap::new();
        for (order, count) in pairs {
            if order < 2 {
                return Err(SingularError::InvalidOrder(order));
            }
            if count > 0 {
                *merged.entry(order).or_insert(0) += count;
            }
        }
        Ok(SingularityData {
            entries: merged.into_iter().collect(),
        })
    }

    pub fn from_singularities<'a>(records: impl IntoIterator<Item = &'a CyclicSingularity>) -> SingularityData {
        Self::from_pairs(records.into_iter().map(|s| (s.order, s.count))).expect("cyclic singularities have order ≥ 2")
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count_of(&self, order: u64) -> u64 {
        self.entries.iter().find(|(m, _)| *m == order).map_or(0, |(_, c)| *c)
    }

    /// Number of singular points `k`.
    pub fn point_count(&self) -> u64 {
        self.entries.iter().map(|(_, c)| c).sum()
    }

    /// Number of exceptional curves on the minimal resolution, `Σ count·(m−1)`.
    pub fn exceptional_rank(&self) -> u64 {
        self.entries.iter().map(|(m, c)| c * (m - 1)).sum()
    }

    /// Each order repeated by its count.
    pub fn orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries
            .iter()
            .flat_map(|&(m, c)| std::iter::repeat(m).take(c as usize))
    }

    pub fn with_point(&self, order: u64) -> Result<SingularityData, SingularError> {
        Self::from_pairs(self.entries.iter().copied().chain([(order, 1)]))
    }

    /// Parses the loose printed style, e.g. `2xA1, A2` or `-` for none.
    pub fn parse_printed(s: &str) -> Result<SingularityData, SingularError> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Self::empty());
        }
        let mut pairs = Vec::new();
        for part in s.split(',') {
            pairs.push(parse_term(part.trim(), 'x')?);
        }
        Self::from_pairs(pairs)
    }
}

fn parse_term(term: &str, times: char) -> Result<(u64, u64), SingularError> {
    let bad = || SingularError::Parse(term.to_string());
    let (count, ty) = match term.split_once(times) {
        Some((k, t)) => (k.trim().parse::<u64>().map_err(|_| bad())?, t.trim()),
        None => (1, term),
    };
    let n = ty
        .strip_prefix('A')
        .ok_or_else(bad)?
        .parse::<u64>()
        .map_err(|_| bad())?;
    if n == 0 || count == 0 {
        return Err(bad());
    }
    Ok((n + 1, count))
}

/// Canonical form: ascending order, `k*A{m-1}` with `k = 1` omitted, joined by `+`.
/// The empty multiset is the empty string.
impl fmt::Display for SingularityData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, &(m, c)) in self.entries.iter().enumerate() {
            if idx > 0 {
                f.write_str("+")?;
            }
            if c > 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "A{}", m - 1)?;
        }
        Ok(())
    }
}

impl FromStr for SingularityData {
    type Err = SingularError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let pairs = s
            .split('+')
            .map(|t| parse_term(t.trim(), '*'))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_pairs(pairs)
    }
}

impl Serialize for SingularityData {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SingularityData {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
