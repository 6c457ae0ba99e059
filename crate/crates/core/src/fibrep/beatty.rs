//! Certified floors of numbers `a + bφ` with rational `a`, `b`.
//!
//! `φ` is bracketed by consecutive Fibonacci convergents `F_{m+1}/F_m`, which
//! alternate around it. The bracket is tightened until no integer lies
//! between the two images, at which point the floor is decided exactly.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exact::{fib, ExactRational, Integer, Natural};

fn int(n: &Natural) -> ExactRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// Rational `(lower, upper)` with `lower < φ < upper`, from convergents of index about `m`.
pub fn phi_bracket(m: u64) -> (ExactRational, ExactRational) {
    // F_{k+1}/F_k is below φ for odd k and above it for even k.
    let k = if m % 2 == 1 { m } else { m + 1 };
    let (fk, fk1, fk2) = (fib(k), fib(k + 1), fib(k + 2));
    let lower = BigRational::new(fk1.clone().into(), fk.into());
    let upper = BigRational::new(fk2.into(), fk1.into());
    (lower, upper)
}

/// `⌊a + bφ⌋`, exactly.
pub fn floor_phi_affine(a: &ExactRational, b: &ExactRational) -> Integer {
    if b.is_zero() {
        return a.floor().to_integer();
    }
    let mut m = 8u64;
    loop {
        let (lo, hi) = phi_bracket(m);
        let (x_lo, x_hi) = if b.is_positive() {
            (a + b * &lo, a + b * &hi)
        } else {
            (a + b * &hi, a + b * &lo)
        };
        // x_lo < x < x_hi; decisive when no integer sits in (x_lo, x_hi].
        let f = x_lo.floor().to_integer();
        if x_hi.ceil().to_integer() - 1 == f {
            return f;
        }
        m *= 2;
    }
}

/// `⌊p + qφ⌋` for integers.
pub fn floor_phi_int(p: i64, q: &Integer) -> Integer {
    floor_phi_affine(&BigRational::from_integer(p.into()), &BigRational::from_integer(q.clone()))
}

/// Sign of `u + vφ` for integers `u`, `v`, decided exactly.
pub fn sign_phi(u: &Integer, v: &Integer) -> Ordering {
    // u + vφ = (A + v√5)/2 with A = 2u + v.
    let a: Integer = u * BigInt::from(2) + v;
    let sa = a.sign();
    let sv = v.sign();
    let five_v2: Integer = v * v * BigInt::from(5);
    use num_bigint::Sign::*;
    match (sa, sv) {
        (NoSign, NoSign) => Ordering::Equal,
        (Plus, Plus) | (Plus, NoSign) | (NoSign, Plus) => Ordering::Greater,
        (Minus, Minus) | (Minus, NoSign) | (NoSign, Minus) => Ordering::Less,
        (Plus, Minus) => (&a * &a).cmp(&five_v2),
        (Minus, Plus) => five_v2.cmp(&(&a * &a)),
    }
}

fn to_nat(v: Integer) -> Natural {
    v.to_biguint().expect("floor of a nonnegative quantity")
}

fn n_int(n: &Natural) -> BigInt {
    BigInt::from(n.clone())
}

/// `⌊nφ + 1/φ⌋` from the Beatty definition (`1/φ = φ − 1`).
pub fn beatty_rho(n: &Natural) -> Natural {
    to_nat(floor_phi_affine(&-ExactRational::from_integer(1.into()), &int(&(n + 1u32))))
}

/// `⌊nφ² + 1/φ⌋` (`φ² = φ + 1`).
pub fn beatty_rho2(n: &Natural) -> Natural {
    let a = BigRational::from_integer(n_int(n) - 1);
    to_nat(floor_phi_affine(&a, &int(&(n + 1u32))))
}

/// `⌊nφ + 2/φ⌋`.
pub fn beatty_t(n: &Natural) -> Natural {
    let a = BigRational::from_integer(BigInt::from(-2));
    to_nat(floor_phi_affine(&a, &int(&(n + 2u32))))
}

/// `α(n) = ⌊nφ − 1/φ²⌋` (`1/φ² = 2 − φ`), for `n >= 1`.
pub fn alpha(n: &Natural) -> Natural {
    let a = BigRational::from_integer(BigInt::from(-2));
    to_nat(floor_phi_affine(&a, &int(&(n + 1u32))))
}

/// `β(n) = ⌊nφ² + φ⌋`.
pub fn beta(n: &Natural) -> Natural {
    to_nat(floor_phi_affine(&int(n), &int(&(n + 1u32))))
}

/// `⌊nφ + 2/φ⌋`, which is `T(n)`; with [`complementary_beta`] it splits the positive integers for `n >= 0`.
pub fn complementary_alpha(n: &Natural) -> Natural {
    beatty_t(n)
}

/// `⌊nφ² + 2φ⌋ = ρ₂(n + 1)`.
pub fn complementary_beta(n: &Natural) -> Natural {
    to_nat(floor_phi_affine(&int(n), &int(&(n + 2u32))))
}

/// `⌊nφ⌋`.
pub fn floor_n_phi(n: &Natural) -> Natural {
    to_nat(floor_phi_affine(&ExactRational::zero(), &int(n)))
}

/// `⌊nφ²⌋`.
pub fn floor_n_phi2(n: &Natural) -> Natural {
    to_nat(floor_phi_affine(&int(n), &int(n)))
}

/// `⌊n/φ⌋ = ⌊n(φ − 1)⌋`.
pub fn floor_n_over_phi(n: &Natural) -> Natural {
    to_nat(floor_phi_affine(&-int(n), &int(n)))
}

/// `⌊n/φ²⌋ = ⌊n(2 − φ)⌋`.
pub fn floor_n_over_phi2(n: &Natural) -> Natural {
    let two_n = int(&(n * BigUint::from(2u32)));
    to_nat(floor_phi_affine(&two_n, &-int(n)))
}
