use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExactRational, Natural};
use crate::error::{domain, Result};

/// Partial quotients `[a_1, a_2, ..., a_m]` of `1/(a_1 + 1/(a_2 + ...))`.
///
/// Canonical form has `a_m >= 2` whenever `m >= 2`, so `1/2 = [2]` and never
/// `[1, 1]`. The only word ending in 1 that `cf_encode` produces is `[1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfWord {
    terms: Vec<Natural>,
}

impl CfWord {
    /// Accepts any nonempty list of positive terms, canonical or not.
    pub fn new(terms: Vec<Natural>) -> Result<Self> {
        if terms.is_empty() {
            return Err(domain("continued fraction needs at least one term"));
        }
        if terms.iter().any(Zero::is_zero) {
            return Err(domain("continued fraction terms must be positive"));
        }
        Ok(CfWord { terms })
    }

    pub fn from_u64s(terms: &[u64]) -> Result<Self> {
        Self::new(terms.iter().map(|&t| BigUint::from(t)).collect())
    }

    pub fn terms(&self) -> &[Natural] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.terms.len() == 1 || !self.terms.last().is_some_and(One::is_one)
    }

    /// The other expansion of the same rational: `[.., a_m]` becomes
    /// `[.., a_m − 1, 1]` and `[.., a, 1]` folds back to `[.., a + 1]`.
    pub fn alternative(&self) -> CfWord {
        let mut terms = self.terms.clone();
        let last = terms.pop().expect("nonempty");
        match terms.last_mut() {
            // [1] has no other expansion inside (0, 1].
            None if last.is_one() => return self.clone(),
            Some(prev) if last.is_one() => *prev += 1u32,
            _ => {
                terms.push(last - 1u32);
                terms.push(BigUint::one());
            }
        }
        CfWord { terms }
    }
}

impl fmt::Display for CfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

/// Canonical expansion of a rational in `(0, 1]`.
pub fn cf_encode(r: &ExactRational) -> Result<CfWord> {
    if r.numer().sign() != Sign::Plus || r > &BigRational::one() {
        return Err(domain(format!("{r} is outside (0, 1]")));
    }
    // r = p/q, 1/r = q/p; run Euclid on (q, p).
    let mut num: BigUint = r.denom().magnitude().clone();
    let mut den: BigUint = r.numer().magnitude().clone();
    let mut terms = Vec::new();
    while !den.is_zero() {
        let (quot, rem) = num.div_rem(&den);
        terms.push(quot);
        num = std::mem::replace(&mut den, rem);
    }
    Ok(CfWord { terms })
}

pub fn cf_decode(cf: &CfWord) -> ExactRational {
    let mut acc = BigRational::zero();
    for t in cf.terms.iter().rev() {
        acc = (BigRational::from_integer(BigInt::from(t.clone())) + acc).recip();
    }
    acc
}
