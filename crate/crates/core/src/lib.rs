//! Singularity data of the general anticanonical hypersurface in a weighted
//! projective 3-space, and the invariants of the transverse Levi-Civita
//! connection over a Sasakian 5-manifold with that surface as leaf space.
//!
//! * [`lattice`]: exact rationals, weight vectors, weighted-degree monomials.
//! * [`hypersurface`]: well-formedness and quasi-smoothness.
//! * [`singular`]: du Val points at vertices and along edges.
//! * [`instanton`]: connection degree, irreducibility, moduli dimension.
//! * [`reid`]: the 95-family search, the published tables, and the diff.
//! * [`cli`]: the `reid-k3` command.

pub mod cli;
pub mod hypersurface;
pub mod instanton;
pub mod lattice;
pub mod reid;
pub mod singular;
