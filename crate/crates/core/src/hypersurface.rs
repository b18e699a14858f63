//! Admissibility of a weight vector: well-formedness of the ambient space
//! and of the general hypersurface, the linear-cone exclusion, and
//! quasi-smoothness of the general member.

use serde::Serialize;

use crate::lattice::{enumerate_monomials, gcd, has_monomial, ExponentVector, IndexSubset, WeightVector};

/// How a coordinate subset `I` is shown not to break quasi-smoothness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessKind {
    /// A degree-`d` monomial in the variables of `I` alone.
    PureMonomial(ExponentVector),
    /// `|I|` monomials `m·x_e`, `m` supported in `I`, with pairwise distinct `e ∉ I`.
    /// Each entry stores `m` and `e`.
    TiltedMonomials(Vec<(ExponentVector, usize)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiSmoothWitness {
    pub subset: IndexSubset,
    pub satisfied_by: WitnessKind,
}

impl QuasiSmoothWitness {
    /// Full monomials of the witness, including the external factor for tilted entries.
    pub fn monomials(&self) -> Vec<ExponentVector> {
        match &self.satisfied_by {
            WitnessKind::PureMonomial(m) => vec![*m],
            WitnessKind::TiltedMonomials(entries) => entries.iter().map(|(m, e)| m.times_variable(*e)).collect(),
        }
    }

    /// Mechanical re-check of the witness shape and degrees.
    pub fn verify(&self, w: &WeightVector) -> bool {
        let d = w.degree();
        match &self.satisfied_by {
            WitnessKind::PureMonomial(m) => m.is_supported_in(self.subset) && m.weighted_degree(w) == d,
            WitnessKind::TiltedMonomials(entries) => {
                let mut seen = 0u8;
                entries.len() == self.subset.len()
                    && entries.iter().all(|(m, e)| {
                        let fresh = seen & (1 << e) == 0;
                        seen |= 1 << e;
                        fresh
                            && !self.subset.contains(*e)
                            && m.is_supported_in(self.subset)
                            && m.times_variable(*e).weighted_degree(w) == d
                    })
            }
        }
    }
}

pub fn ambient_well_formed(w: &WeightVector) -> bool {
    let ws = w.weights();
    (0..4).all(|skip| {
        let g = (0..4).filter(|&i| i != skip).fold(0, |g, i| gcd(g, ws[i]));
        g == 1
    })
}

pub fn is_linear_cone(w: &WeightVector) -> bool {
    w.weights().contains(&w.degree())
}

/// Pairs `i < j` whose weights share a factor, with that factor.
pub fn singular_edges(w: &WeightVector) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
    (0..4)
        .flat_map(move |i| (i + 1..4).map(move |j| (i, j, gcd(w.weight(i), w.weight(j)))))
        .filter(|&(_, _, h)| h > 1)
}

/// The general member must not contain any edge of the ambient singular locus.
pub fn hypersurface_well_formed(w: &WeightVector) -> bool {
    ambient_well_formed(w) && singular_edges(w).all(|(i, j, _)| has_monomial(w, w.degree(), IndexSubset::pair(i, j)))
}

fn subset_witness(w: &WeightVector, subset: IndexSubset) -> Option<QuasiSmoothWitness> {
    let d = w.degree();
    if let Some(m) = enumerate_monomials(w, d, subset).into_iter().next() {
        return Some(QuasiSmoothWitness {
            subset,
            satisfied_by: WitnessKind::PureMonomial(m),
        });
    }
    // Any |I| distinct external indices that each admit some tilted monomial will do;
    // take the smallest such indices and the first monomial for each.
    let mut entries = Vec::with_capacity(subset.len());
    for e in subset.complement() {
        if entries.len() == subset.len() {
            break;
        }
        let Some(rest) = d.checked_sub(w.weight(e)) else {
            continue;
        };
        if let Some(m) = enumerate_monomials(w, rest, subset).into_iter().next() {
            entries.push((m, e));
        }
    }
    (entries.len() == subset.len()).then_some(QuasiSmoothWitness {
        subset,
        satisfied_by: WitnessKind::TiltedMonomials(entries),
    })
}

/// One witness per nonempty coordinate subset, or `None` if some subset has none.
pub fn general_member_quasi_smooth(w: &WeightVector) -> Option<Vec<QuasiSmoothWitness>> {
    IndexSubset::all().map(|s| subset_witness(w, s)).collect()
}

/// Allocation-free version of [`general_member_quasi_smooth`].
pub fn is_quasi_smooth(w: &WeightVector) -> bool {
    let d = w.degree();
    IndexSubset::all().all(|s| {
        has_monomial(w, d, s)
            || s.complement()
                .filter(|&e| d >= w.weight(e) && has_monomial(w, d - w.weight(e), s))
                .count()
                >= s.len()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub ambient_well_formed: bool,
    pub hypersurface_well_formed: bool,
    pub quasi_smooth: bool,
    pub linear_cone: bool,
}

impl Admissibility {
    pub fn of(w: &WeightVector) -> Admissibility {
        Admissibility {
            ambient_well_formed: ambient_well_formed(w),
            hypersurface_well_formed: hypersurface_well_formed(w),
            quasi_smooth: is_quasi_smooth(w),
            linear_cone: is_linear_cone(w),
        }
    }

    pub fn is_candidate(&self) -> bool {
        self.ambient_well_formed && self.hypersurface_well_formed && self.quasi_smooth && !self.linear_cone
    }

    /// The first failed condition, phrased for reports.
    pub fn rejection_reason(&self) -> Option<&'static str> {
        if !self.ambient_well_formed {
            Some("ambient not well-formed")
        } else if !self.hypersurface_well_formed {
            Some("hypersurface not well-formed")
        } else if !self.quasi_smooth {
            Some("general member not quasi-smooth")
        } else if self.linear_cone {
            Some("linear cone")
        } else {
            None
        }
    }
}

/// The singleton part of quasi-smoothness: each `x_i` has a pure power or a
/// tilted power `x_i^k x_e` in degree `d`. Cheap necessary condition.
pub fn vertices_quasi_smooth(w: &WeightVector) -> bool {
    let d = w.degree();
    (0..4).all(|i| {
        let wi = w.weight(i);
        d % wi == 0 || (0..4).any(|e| e != i && d > w.weight(e) && (d - w.weight(e)) % wi == 0)
    })
}

pub fn k3_candidate(w: &WeightVector) -> bool {
    vertices_quasi_smooth(w)
        && ambient_well_formed(w)
        && hypersurface_well_formed(w)
        && !is_linear_cone(w)
        && is_quasi_smooth(w)
}
