use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::LatticeError;

/// An exact fraction kept in lowest terms with a positive denominator.
///
/// Because the representation is canonical, derived equality and hashing
/// coincide with equality of values. All arithmetic is checked: an
/// intermediate that does not fit back into `i64` is reported as
/// [`LatticeError::Overflow`] instead of wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(i64, i64)", into = "(i64, i64)")]
pub struct Rational {
    numerator: i64,
    denominator: i64,
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational {
        numerator: 0,
        denominator: 1,
    };
    pub const ONE: Rational = Rational {
        numerator: 1,
        denominator: 1,
    };

    /// Reduces `numerator / denominator` to canonical form.
    pub fn new(numerator: i64, denominator: i64) -> Result<Rational, LatticeError> {
        Self::from_wide(numerator as i128, denominator as i128)
    }

    pub fn from_integer(value: i64) -> Rational {
        Rational {
            numerator: value,
            denominator: 1,
        }
    }

    fn from_wide(numerator: i128, denominator: i128) -> Result<Rational, LatticeError> {
        if denominator == 0 {
            return Err(LatticeError::ZeroDenominator);
        }
        if numerator == 0 {
            return Ok(Self::ZERO);
        }
        let g = gcd_u128(numerator.unsigned_abs(), denominator.unsigned_abs()) as i128;
        let sign = if denominator < 0 { -1 } else { 1 };
        let num = sign * (numerator / g);
        let den = sign * (denominator / g);
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(numerator), Ok(denominator)) => Ok(Rational { numerator, denominator }),
            _ => Err(LatticeError::Overflow),
        }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn is_integer(&self) -> bool {
        self.denominator == 1
    }

    pub fn checked_add(self, rhs: Rational) -> Result<Rational, LatticeError> {
        let num = self.numerator as i128 * rhs.denominator as i128 + rhs.numerator as i128 * self.denominator as i128;
        let den = self.denominator as i128 * rhs.denominator as i128;
        Self::from_wide(num, den)
    }

    pub fn checked_sub(self, rhs: Rational) -> Result<Rational, LatticeError> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_mul(self, rhs: Rational) -> Result<Rational, LatticeError> {
        Self::from_wide(
            self.numerator as i128 * rhs.numerator as i128,
            self.denominator as i128 * rhs.denominator as i128,
        )
    }

    pub fn checked_div(self, rhs: Rational) -> Result<Rational, LatticeError> {
        Self::from_wide(
            self.numerator as i128 * rhs.denominator as i128,
            self.denominator as i128 * rhs.numerator as i128,
        )
    }

    pub fn checked_neg(self) -> Result<Rational, LatticeError> {
        self.numerator
            .checked_neg()
            .map(|numerator| Rational {
                numerator,
                denominator: self.denominator,
            })
            .ok_or(LatticeError::Overflow)
    }

    pub fn to_f64(self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}

impl TryFrom<(i64, i64)> for Rational {
    type Error = LatticeError;

    fn try_from((n, d): (i64, i64)) -> Result<Self, Self::Error> {
        Rational::new(n, d)
    }
}

impl From<Rational> for (i64, i64) {
    fn from(r: Rational) -> Self {
        (r.numerator, r.denominator)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numerator as i128 * other.denominator as i128;
        let rhs = other.numerator as i128 * self.denominator as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Parses `n` or `n/d`. Unreduced input such as `110/10` is accepted and reduced.
impl FromStr for Rational {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LatticeError::Parse(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = n.trim().parse::<i64>().map_err(|_| bad())?;
                let d = d.trim().parse::<i64>().map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => s.parse::<i64>().map(Rational::from_integer).map_err(|_| bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduce_examples() {
        assert_eq!(Rational::new(266, 24).unwrap(), Rational::new(133, 12).unwrap());
        let r = Rational::new(266, 24).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (133, 12));
        let z = Rational::new(0, 7).unwrap();
        assert_eq!((z.numerator(), z.denominator()), (0, 1));
        let n = Rational::new(-4233, -210).unwrap();
        assert_eq!((n.numerator(), n.denominator()), (1411, 70));
        let m = Rational::new(3, -6).unwrap();
        assert_eq!((m.numerator(), m.denominator()), (-1, 2));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(Rational::new(1, 0), Err(LatticeError::ZeroDenominator));
        assert_eq!("3/0".parse::<Rational>(), Err(LatticeError::ZeroDenominator));
    }

    #[test]
    fn overflow_is_reported_not_wrapped() {
        let big = Rational::from_integer(i64::MAX);
        assert_eq!(big.checked_add(Rational::ONE), Err(LatticeError::Overflow));
        assert_eq!(big.checked_mul(Rational::from_integer(2)), Err(LatticeError::Overflow));
        assert_eq!(
            Rational::from_integer(i64::MIN).checked_neg(),
            Err(LatticeError::Overflow)
        );
        // i64::MIN / -1 does not fit either
        assert_eq!(Rational::new(i64::MIN, -1), Err(LatticeError::Overflow));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("110/10".parse::<Rational>().unwrap(), Rational::from_integer(11));
        assert_eq!("0".parse::<Rational>().unwrap(), Rational::ZERO);
        assert_eq!(Rational::new(1411, 210).unwrap().to_string(), "1411/210");
        assert_eq!(Rational::new(79, 6).unwrap().to_string(), "79/6");
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn ordering() {
        let a = Rational::new(1411, 210).unwrap();
        let b = Rational::new(1411, 70).unwrap();
        assert!(a < b);
        assert!(Rational::new(-1, 2).unwrap() < Rational::ZERO);
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-500i64..500, 1i64..200).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn addition_is_associative(a in small(), b in small(), c in small()) {
            let lhs = a.checked_add(b).unwrap().checked_add(c).unwrap();
            let rhs = a.checked_add(b.checked_add(c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reduce_is_idempotent(n in -10_000i64..10_000, d in (1i64..5_000).prop_flat_map(|d| prop_oneof![Just(d), Just(-d)])) {
            let r = Rational::new(n, d).unwrap();
            prop_assert_eq!(Rational::new(r.numerator(), r.denominator()).unwrap(), r);
            prop_assert!(r.denominator() > 0);
            prop_assert_eq!(gcd_u128(r.numerator().unsigned_abs() as u128, r.denominator() as u128).max(1), 1);
        }

        #[test]
        fn sub_inverts_add(a in small(), b in small()) {
            prop_assert_eq!(a.checked_add(b).unwrap().checked_sub(b).unwrap(), a);
        }
    }
}
