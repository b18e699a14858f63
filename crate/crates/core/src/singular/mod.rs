//! Singularity data of the general member: du Val points of type `A_{m-1}`
//! at the coordinate vertices and inside the singular edges.

mod data;
mod oracle;

pub use data::{CyclicSingularity, SingularLocus, SingularityData};
pub use oracle::{finite_field_edge_oracle, DEFAULT_PRIME};

use thiserror::Error;

use crate::hypersurface::{k3_candidate, singular_edges};
use crate::lattice::{enumerate_monomials, gcd, IndexSubset, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularError {
    /// A consistency check that must hold on admissible input failed.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("{0} is not a K3 candidate")]
    NotCandidate(WeightVector),
    #[error("singularity order must be at least 2, got {0}")]
    InvalidOrder(u64),
    #[error("cannot parse singularity term {0:?}")]
    Parse(String),
    #[error("({0},{1}) is not a singular edge")]
    BadEdge(usize, usize),
    #[error("{0} is not a prime above the degree")]
    BadPrime(u64),
    #[error("edge {edge:?}: {attempts} random draws all had repeated roots")]
    DegenerateDraws { edge: (usize, usize), attempts: u64 },
}

fn complement_pair(a: usize, b: usize) -> (usize, usize) {
    let mut rest = (0..4).filter(|&k| k != a && k != b);
    (rest.next().unwrap(), rest.next().unwrap())
}

/// The singular point at the vertex `P_i`, if the general member passes
/// through it and it is singular there.
///
/// The point lies on the surface iff `w_i ∤ d`. Quasi-smoothness then gives
/// a monomial `x_i^k x_j`, so `x_j` is eliminated locally and the two
/// remaining coordinates carry weights summing to `0 mod w_i`: an `A_{w_i-1}` point.
pub fn vertex_singularity(w: &WeightVector, i: usize) -> Result<Option<CyclicSingularity>, SingularError> {
    let wi = w.weight(i);
    let d = w.degree();
    if wi == 1 || d % wi == 0 {
        return Ok(None);
    }
    let j = (0..4)
        .filter(|&j| j != i)
        .find(|&j| d > w.weight(j) && (d - w.weight(j)) % wi == 0)
        .ok_or_else(|| {
            SingularError::Inconsistent(format!("{w}: no monomial x{i}^k x_j of degree {d} at vertex {i}"))
        })?;
    let (p, q) = complement_pair(i, j);
    let (wp, wq) = (w.weight(p), w.weight(q));
    if (wp + wq) % wi != 0 || gcd(wp, wi) != 1 {
        return Err(SingularError::Inconsistent(format!(
            "{w}: vertex {i} is not of type A (transverse weights {wp}, {wq} mod {wi})"
        )));
    }
    Ok(Some(CyclicSingularity {
        locus: SingularLocus::Vertex(i),
        order: wi,
        count: 1,
    }))
}

/// Singular points in the open edge `{x_k = 0, k ∉ {i, j}}`: one fewer than
/// the number of degree-`d` monomials in `x_i, x_j`.
pub fn edge_singularities(w: &WeightVector, i: usize, j: usize) -> Result<Option<CyclicSingularity>, SingularError> {
    if i >= j || j > 3 {
        return Err(SingularError::BadEdge(i, j));
    }
    let h = gcd(w.weight(i), w.weight(j));
    if h < 2 {
        return Err(SingularError::BadEdge(i, j));
    }
    let solutions = enumerate_monomials(w, w.degree(), IndexSubset::pair(i, j));
    if solutions.is_empty() {
        return Err(SingularError::Inconsistent(format!(
            "{w}: general member contains the edge ({i},{j})"
        )));
    }
    let (p, q) = complement_pair(i, j);
    if (w.weight(p) + w.weight(q)) % h != 0 {
        return Err(SingularError::Inconsistent(format!(
            "{w}: edge ({i},{j}) transverse weights not balanced mod {h}"
        )));
    }
    let interior = solutions.len() as u64 - 1;
    Ok((interior > 0).then_some(CyclicSingularity {
        locus: SingularLocus::EdgeInterior(i, j),
        order: h,
        count: interior,
    }))
}

/// Every vertex and edge contribution, in locus order.
pub fn singular_points(w: &WeightVector) -> Result<Vec<CyclicSingularity>, SingularError> {
    if !k3_candidate(w) {
        return Err(SingularError::NotCandidate(*w));
    }
    let mut out = Vec::new();
    for i in 0..4 {
        out.extend(vertex_singularity(w, i)?);
    }
    for (i, j, _) in singular_edges(w) {
        out.extend(edge_singularities(w, i, j)?);
    }
    Ok(out)
}

pub fn singularity_data(w: &WeightVector) -> Result<SingularityData, SingularError> {
    Ok(SingularityData::from_singularities(&singular_points(w)?))
}
