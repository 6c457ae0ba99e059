//! Arbitrary-precision foundations.
//!
//! Naturals, integers and rationals are the `num` big types. On top of them
//! live the pieces the sequence modules share: exact square roots, Fibonacci
//! numbers, Zeckendorf words, continued fractions, dyadic rationals and the
//! Eisenstein integers `Z[σ]`.

mod cf;
mod dyadic;
mod eisenstein;
mod fib;
mod zeckendorf;

pub use cf::{cf_decode, cf_encode, CfWord};
pub use dyadic::DyadicRational;
pub use eisenstein::{eis_mul, EisensteinInt};
pub use fib::{fib, fibs_through};
pub use zeckendorf::{zeck_decode, zeck_encode, ZeckendorfWord};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

pub type Natural = BigUint;
pub type Integer = BigInt;
/// Signed rational kept in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// `(⌊√n⌋, whether n is a perfect square)`.
pub fn isqrt_exact(n: &Natural) -> (Natural, bool) {
    let root = n.sqrt();
    let perfect = &root * &root == *n;
    (root, perfect)
}

/// Lifts a natural into a rational.
pub fn rational_from(n: &Natural) -> ExactRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// Builds `p / q` from naturals; `q` must be nonzero.
pub fn ratio(p: &Natural, q: &Natural) -> ExactRational {
    BigRational::new(BigInt::from(p.clone()), BigInt::from(q.clone()))
}
