use std::fmt;

use serde::{Deserialize, Serialize};

use super::LatticeError;

/// Ascending weights of a weighted projective 3-space together with the
/// anticanonical degree `d = w0 + w1 + w2 + w3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector {
    w: [u64; 4],
    d: u64,
}

impl WeightVector {
    /// Sorts the raw weights and attaches the degree. Every component must be positive.
    pub fn normalize(raw: [i64; 4]) -> Result<WeightVector, LatticeError> {
        let mut w = [0u64; 4];
        for (slot, &x) in w.iter_mut().zip(raw.iter()) {
            if x <= 0 {
                return Err(LatticeError::NonPositiveWeight(x));
            }
            *slot = x as u64;
        }
        w.sort_unstable();
        let d = w
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .ok_or(LatticeError::Overflow)?;
        Ok(WeightVector { w, d })
    }

    /// Builds a weight vector with an arbitrary degree, skipping the
    /// `d = Σw` construction. Only used to exercise degenerate predicates.
    #[cfg(test)]
    pub(crate) fn with_degree_unchecked(w: [u64; 4], d: u64) -> WeightVector {
        WeightVector { w, d }
    }

    pub fn weights(&self) -> [u64; 4] {
        self.w
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.w[i]
    }

    pub fn degree(&self) -> u64 {
        self.d
    }

    pub fn max_weight(&self) -> u64 {
        self.w[3]
    }
}

impl TryFrom<[i64; 4]> for WeightVector {
    type Error = LatticeError;

    fn try_from(raw: [i64; 4]) -> Result<Self, Self::Error> {
        WeightVector::normalize(raw)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, e] = self.w;
        write!(f, "({a},{b},{c},{e})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalize_examples() {
        let w = WeightVector::normalize([11, 1, 6, 4]).unwrap();
        assert_eq!(w.weights(), [1, 4, 6, 11]);
        assert_eq!(w.degree(), 22);
        let w = WeightVector::normalize([1, 1, 1, 1]).unwrap();
        assert_eq!((w.weights(), w.degree()), ([1, 1, 1, 1], 4));
        assert_eq!(
            WeightVector::normalize([0, 1, 2, 3]),
            Err(LatticeError::NonPositiveWeight(0))
        );
        assert_eq!(
            WeightVector::normalize([1, -2, 2, 3]),
            Err(LatticeError::NonPositiveWeight(-2))
        );
        assert_eq!(
            WeightVector::normalize([7, 8, 10, 25]).unwrap().to_string(),
            "(7,8,10,25)"
        );
    }

    proptest! {
        #[test]
        fn normalize_is_permutation_invariant(raw in proptest::array::uniform4(1i64..60), perm in Just([0usize, 1, 2, 3]).prop_shuffle()) {
            let shuffled = [raw[perm[0]], raw[perm[1]], raw[perm[2]], raw[perm[3]]];
            let a = WeightVector::normalize(raw).unwrap();
            let b = WeightVector::normalize(shuffled).unwrap();
            prop_assert_eq!(a, b);
            let again = a.weights().map(|x| x as i64);
            prop_assert_eq!(WeightVector::normalize(again).unwrap(), a);
            prop_assert_eq!(a.degree(), raw.iter().sum::<i64>() as u64);
        }
    }
}
