use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExactRational, Natural};
use crate::error::{domain, Result};

/// `k / 2^n` in lowest terms: `k` is odd, or `n = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    k: Natural,
    n: u64,
}

impl DyadicRational {
    /// Reduces `k / 2^n`.
    pub fn new(k: impl Into<Natural>, n: u64) -> Self {
        let mut k = k.into();
        let mut n = n;
        if k.is_zero() {
            return DyadicRational { k, n: 0 };
        }
        let tz = k.trailing_zeros().unwrap_or(0).min(n);
        k >>= tz;
        n -= tz;
        DyadicRational { k, n }
    }

    pub fn zero() -> Self {
        Self::new(0u32, 0)
    }

    pub fn one() -> Self {
        Self::new(1u32, 0)
    }

    pub fn numerator(&self) -> &Natural {
        &self.k
    }

    pub fn exponent(&self) -> u64 {
        self.n
    }

    /// `(k', n)` with `k' / 2^n` equal to `self`; fails if `n` is below the reduced exponent.
    pub fn with_exponent(&self, n: u64) -> Result<Natural> {
        if n < self.n {
            return Err(domain(format!("{self} has no form over 2^{n}")));
        }
        Ok(&self.k << (n - self.n))
    }

    pub fn to_rational(&self) -> ExactRational {
        BigRational::new(BigInt::from(self.k.clone()), BigInt::from(BigUint::one() << self.n))
    }

    /// Exact conversion from a rational whose reduced denominator is a power of two.
    pub fn from_rational(r: &ExactRational) -> Result<Self> {
        let (num, den) = (r.numer(), r.denom());
        if num.sign() == num_bigint::Sign::Minus {
            return Err(domain(format!("{r} is negative")));
        }
        let den = den.magnitude();
        let n = den.trailing_zeros().unwrap_or(0);
        if (den >> n) != BigUint::one() {
            return Err(domain(format!("{r} is not dyadic")));
        }
        Ok(Self::new(num.magnitude().clone(), n))
    }

    pub fn in_unit_interval(&self) -> bool {
        self.k <= BigUint::one() << self.n
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            write!(f, "{}", self.k)
        } else {
            write!(f, "{}/{}", self.k, BigUint::one() << self.n)
        }
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let n = self.n.max(other.n);
        (&self.k << (n - self.n)).cmp(&(&other.k << (n - other.n)))
    }
}
