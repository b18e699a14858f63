//! Invariants of the transverse Levi-Civita connection on a Sasakian
//! 5-manifold whose leaf space is a weighted K3 hypersurface: its degree,
//! the irreducibility certificate, and the complex dimension of the moduli
//! space of irreducible ASD contact instantons.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{LatticeError, Rational, WeightVector};
use crate::singular::{singularity_data, SingularError, SingularityData};

/// The degree value at which the irreducibility criterion is silent.
pub const CRITICAL_DEGREE: i64 = 24;
/// Moduli dimension of the smooth case.
pub const SMOOTH_DIMENSION: i64 = 90;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstantonError {
    #[error(transparent)]
    Arithmetic(#[from] LatticeError),
    #[error(transparent)]
    Singular(#[from] SingularError),
    #[error("inconsistent certification input: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Irreducibility {
    CertifiedIrreducible,
    /// Degree equals 24; the criterion only gives a sufficient condition.
    Undetermined,
}

impl Irreducibility {
    pub fn label(&self) -> &'static str {
        match self {
            Irreducibility::CertifiedIrreducible => "certified",
            Irreducibility::Undetermined => "undetermined",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IrreducibilityCertificate {
    pub status: Irreducibility,
    pub witness_degree: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModuliDimension {
    pub value: i64,
    /// Set when the formula returns a negative number, i.e. it is applied
    /// outside the setting where it is known to hold.
    pub out_of_scope: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InstantonInvariants {
    pub degree: Rational,
    pub certificate: IrreducibilityCertificate,
    pub dim: ModuliDimension,
}

/// `Σ count·(m² − 1)/m`, exactly.
pub fn connection_degree(data: &SingularityData) -> Result<Rational, LatticeError> {
    data.entries().iter().try_fold(Rational::ZERO, |acc, &(m, count)| {
        let m = i64::try_from(m).map_err(|_| LatticeError::Overflow)?;
        let count = i64::try_from(count).map_err(|_| LatticeError::Overflow)?;
        let sq = m.checked_mul(m).ok_or(LatticeError::Overflow)?;
        let term = Rational::new(sq - 1, m)?.checked_mul(Rational::from_integer(count))?;
        acc.checked_add(term)
    })
}

pub fn irreducibility(degree: Rational) -> IrreducibilityCertificate {
    let status = if degree == Rational::from_integer(CRITICAL_DEGREE) {
        Irreducibility::Undetermined
    } else {
        Irreducibility::CertifiedIrreducible
    };
    IrreducibilityCertificate {
        status,
        witness_degree: degree,
    }
}

/// `90 − 2·Σ count·(2m − 1)`.
pub fn moduli_dimension(data: &SingularityData) -> ModuliDimension {
    let loss: i64 = data.entries().iter().map(|&(m, c)| c as i64 * (2 * m as i64 - 1)).sum();
    let value = SMOOTH_DIMENSION - 2 * loss;
    ModuliDimension {
        value,
        out_of_scope: value < 0,
    }
}

pub fn invariants(data: &SingularityData) -> Result<InstantonInvariants, LatticeError> {
    let degree = connection_degree(data)?;
    Ok(InstantonInvariants {
        degree,
        certificate: irreducibility(degree),
        dim: moduli_dimension(data),
    })
}

/// Summary of what the invariants establish for one weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certification {
    pub weights: WeightVector,
    pub singularities: SingularityData,
    pub invariants: InstantonInvariants,
}

impl Certification {
    pub fn is_rigid(&self) -> bool {
        self.invariants.dim.value == 0
    }

    pub fn headline(&self) -> String {
        match self.invariants.certificate.status {
            Irreducibility::CertifiedIrreducible => {
                format!("irreducible; dim_C M* = {}", self.invariants.dim.value)
            }
            Irreducibility::Undetermined => "irreducibility undetermined: degree equals 24".to_string(),
        }
    }
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.weights;
        let inv = &self.invariants;
        writeln!(f, "X_{} in P{}", w.degree(), w)?;
        let sing = if self.singularities.is_empty() {
            "none".to_string()
        } else {
            self.singularities.to_string()
        };
        writeln!(f, "singular points: {sing}")?;
        writeln!(f, "deg(nabla*) = {}", inv.degree)?;
        writeln!(f, "{}", self.headline())?;
        match inv.certificate.status {
            Irreducibility::CertifiedIrreducible => {
                writeln!(
                    f,
                    "The transverse Levi-Civita connection nabla* on Lambda^- H* is an irreducible ASD contact \
                     instanton over any compact Sasakian 5-manifold with transverse Calabi-Yau structure and this \
                     leaf space; its moduli space M* is a non-empty hyperkaehler manifold of complex dimension {}.",
                    inv.dim.value
                )?;
                if self.is_rigid() {
                    writeln!(f, "rigid: M* is 0-dimensional, nabla* admits no deformations.")?;
                }
            }
            Irreducibility::Undetermined => {
                writeln!(f, "The degree criterion does not decide irreducibility of nabla* here.")?;
            }
        }
        if inv.dim.out_of_scope {
            writeln!(
                f,
                "warning: negative dimension, formula applied outside its known range."
            )?;
        }
        Ok(())
    }
}

/// Cross-checks that `data` and `inv` were derived from `w` and packages them.
pub fn certify(
    w: &WeightVector,
    data: &SingularityData,
    inv: &InstantonInvariants,
) -> Result<Certification, InstantonError> {
    let expected = singularity_data(w)?;
    if &expected != data {
        return Err(InstantonError::Inconsistent(format!(
            "singularities {data} do not belong to {w} (expected {expected})"
        )));
    }
    let recomputed = invariants(data)?;
    if &recomputed != inv {
        return Err(InstantonError::Inconsistent(format!(
            "invariants do not match singularities {data}"
        )));
    }
    Ok(Certification {
        weights: *w,
        singularities: data.clone(),
        invariants: *inv,
    })
}
