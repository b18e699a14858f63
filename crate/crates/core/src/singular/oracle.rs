//! Randomized finite-field count of interior points on a singular edge.
//!
//! Restricted to the open edge, the general form becomes a univariate
//! polynomial in the edge parameter with one coefficient per lattice
//! solution. With random nonzero coefficients modulo a prime it is
//! squarefree with high probability, and its distinct nonzero roots over
//! the algebraic closure are the interior points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SingularError;
use crate::lattice::{enumerate_monomials, gcd, IndexSubset, WeightVector};

pub const DEFAULT_PRIME: u64 = 1_000_000_007;
const MAX_DRAWS: u64 = 16;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Coefficients low to high over `F_p`, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly {
    coeffs: Vec<u64>,
    p: u64,
}

impl Poly {
    fn new(mut coeffs: Vec<u64>, p: u64) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs, p }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| mul_mod(c, k as u64 % self.p, self.p))
            .collect();
        Poly::new(coeffs, self.p)
    }

    fn rem(&self, divisor: &Poly) -> Poly {
        let p = self.p;
        let mut r = self.coeffs.clone();
        let dl = divisor.coeffs.len();
        let inv_lead = pow_mod(*divisor.coeffs.last().unwrap(), p - 2, p);
        while r.len() >= dl {
            let lead = *r.last().unwrap();
            if lead != 0 {
                let q = mul_mod(lead, inv_lead, p);
                let shift = r.len() - dl;
                for (k, &c) in divisor.coeffs.iter().enumerate() {
                    r[shift + k] = (r[shift + k] + p - mul_mod(q, c, p)) % p;
                }
            }
            r.pop();
        }
        Poly::new(r, p)
    }

    fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Distinct nonzero roots in the algebraic closure, when squarefree.
    fn distinct_nonzero_roots(&self) -> Option<usize> {
        let zero_roots = self.coeffs.iter().take_while(|&&c| c == 0).count();
        let stripped = Poly::new(self.coeffs[zero_roots..].to_vec(), self.p);
        let g = stripped.gcd(&stripped.derivative());
        (g.degree() == 0).then(|| stripped.degree())
    }
}

/// Counts the interior points of the edge `{i, j}` as the distinct nonzero
/// roots of a random restriction of the general form.
pub fn finite_field_edge_oracle(
    w: &WeightVector,
    i: usize,
    j: usize,
    prime: u64,
    seed: u64,
) -> Result<u64, SingularError> {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    if j > 3 || i == j {
        return Err(SingularError::BadEdge(i, j));
    }
    let h = gcd(w.weight(i), w.weight(j));
    if h < 2 {
        return Err(SingularError::BadEdge(i, j));
    }
    if prime <= w.degree() || !is_prime(prime) {
        return Err(SingularError::BadPrime(prime));
    }
    let solutions = enumerate_monomials(w, w.degree(), IndexSubset::pair(i, j));
    if solutions.is_empty() {
        return Err(SingularError::Inconsistent(format!(
            "{w}: general member contains the edge ({i},{j})"
        )));
    }
    // Consecutive solutions differ by w_j/h in the exponent of x_i; that step
    // is one power of the edge parameter.
    let step = w.weight(j) / h;
    let base = solutions[0].exponents()[i];
    let mut exponents = Vec::with_capacity(solutions.len());
    for s in &solutions {
        let a = s.exponents()[i] - base;
        if a % step != 0 {
            return Err(SingularError::Inconsistent(format!(
                "{w}: lattice points on edge ({i},{j}) are not evenly spaced"
            )));
        }
        exponents.push((a / step) as usize);
    }
    let top = *exponents.last().unwrap();

    for attempt in 0..MAX_DRAWS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        let mut coeffs = vec![0u64; top + 1];
        for &k in &exponents {
            coeffs[k] = rng.gen_range(1..prime);
        }
        if let Some(n) = Poly::new(coeffs, prime).distinct_nonzero_roots() {
            return Ok(n as u64);
        }
    }
    Err(SingularError::DegenerateDraws {
        edge: (i, j),
        attempts: MAX_DRAWS,
    })
}
