use std::fmt;

use serde::{Deserialize, Serialize};

use super::WeightVector;

/// A nonempty subset of the coordinate indices `{0, 1, 2, 3}`, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSubset(u8);

impl IndexSubset {
    pub const FULL: IndexSubset = IndexSubset(0b1111);

    pub fn from_mask(mask: u8) -> Option<IndexSubset> {
        (mask != 0 && mask <= 0b1111).then_some(IndexSubset(mask))
    }

    pub fn from_indices(indices: &[usize]) -> Option<IndexSubset> {
        let mut mask = 0u8;
        for &i in indices {
            if i > 3 {
                return None;
            }
            mask |= 1 << i;
        }
        Self::from_mask(mask)
    }

    pub fn singleton(i: usize) -> IndexSubset {
        assert!(i < 4, "coordinate index out of range: {i}");
        IndexSubset(1 << i)
    }

    pub fn pair(i: usize, j: usize) -> IndexSubset {
        Self::singleton(i).union(Self::singleton(j))
    }

    /// All fifteen nonempty subsets, smallest cardinality first.
    pub fn all() -> impl Iterator<Item = IndexSubset> {
        let mut masks: Vec<u8> = (1u8..16).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        masks.into_iter().map(IndexSubset)
    }

    pub fn mask(&self) -> u8 {
        self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 4 && self.0 & (1 << i) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn union(self, other: IndexSubset) -> IndexSubset {
        IndexSubset(self.0 | other.0)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..4).filter(move |&i| self.contains(i))
    }

    /// Indices not in the subset, ascending.
    pub fn complement(&self) -> impl Iterator<Item = usize> + '_ {
        (0..4).filter(move |&i| !self.contains(i))
    }
}

impl fmt::Display for IndexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Exponents of a monomial `x0^a0 x1^a1 x2^a2 x3^a3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentVector(pub [u64; 4]);

impl ExponentVector {
    pub const ONE: ExponentVector = ExponentVector([0; 4]);

    pub fn exponents(&self) -> [u64; 4] {
        self.0
    }

    /// Indices with a positive exponent, or `None` for the constant monomial.
    pub fn support(&self) -> Option<IndexSubset> {
        let mask = (0..4).filter(|&i| self.0[i] > 0).fold(0u8, |m, i| m | (1 << i));
        IndexSubset::from_mask(mask)
    }

    pub fn is_supported_in(&self, subset: IndexSubset) -> bool {
        (0..4).all(|i| self.0[i] == 0 || subset.contains(i))
    }

    pub fn weighted_degree(&self, w: &WeightVector) -> u64 {
        (0..4).map(|i| self.0[i] * w.weight(i)).sum()
    }

    /// The monomial multiplied by one more factor of `x_i`.
    pub fn times_variable(mut self, i: usize) -> ExponentVector {
        self.0[i] += 1;
        self
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &a) in self.0.iter().enumerate() {
            match a {
                0 => continue,
                1 => write!(f, "x{i}")?,
                _ => write!(f, "x{i}^{a}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

pub fn weighted_degree(e: &ExponentVector, w: &WeightVector) -> u64 {
    e.weighted_degree(w)
}

/// Every exponent vector supported in `subset` whose weighted degree is
/// exactly `target`, in ascending lexicographic order.
pub fn enumerate_monomials(w: &WeightVector, target: u64, subset: IndexSubset) -> Vec<ExponentVector> {
    let members: Vec<usize> = subset.members().collect();
    let mut out = Vec::new();
    let mut current = [0u64; 4];
    descend(w, &members, target, &mut current, &mut out);
    out
}

fn descend(w: &WeightVector, members: &[usize], remaining: u64, current: &mut [u64; 4], out: &mut Vec<ExponentVector>) {
    let Some((&i, rest)) = members.split_first() else {
        if remaining == 0 {
            out.push(ExponentVector(*current));
        }
        return;
    };
    let wi = w.weight(i);
    if rest.is_empty() {
        if remaining % wi == 0 {
            current[i] = remaining / wi;
            out.push(ExponentVector(*current));
            current[i] = 0;
        }
        return;
    }
    for a in 0..=remaining / wi {
        current[i] = a;
        descend(w, rest, remaining - a * wi, current, out);
    }
    current[i] = 0;
}

/// Whether at least one `subset`-supported monomial has weighted degree `target`.
pub fn has_monomial(w: &WeightVector, target: u64, subset: IndexSubset) -> bool {
    fn any(w: &WeightVector, members: &[usize], remaining: u64) -> bool {
        match members.split_first() {
            None => remaining == 0,
            Some((&i, [])) => remaining % w.weight(i) == 0,
            Some((&i, rest)) => {
                let wi = w.weight(i);
                (0..=remaining / wi).any(|a| any(w, rest, remaining - a * wi))
            }
        }
    }
    let members: Vec<usize> = subset.members().collect();
    any(w, &members, target)
}
