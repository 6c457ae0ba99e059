use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Integer;

/// An element `re + si·σ` of `Z[σ]`, `σ = (1 + √−3)/2`, so `σ² = σ − 1`.
///
/// The conjugate `σ̄` is `1 − σ` in this basis; there is no second generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EisensteinInt {
    pub re: Integer,
    pub si: Integer,
}

impl EisensteinInt {
    pub fn new(re: impl Into<Integer>, si: impl Into<Integer>) -> Self {
        EisensteinInt { re: re.into(), si: si.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn sigma() -> Self {
        Self::new(0, 1)
    }

    pub fn sigma_bar() -> Self {
        Self::new(1, -1)
    }

    /// `σ^k` for any integer `k`; `σ` has order six.
    pub fn sigma_pow(k: i64) -> Self {
        match k.rem_euclid(6) {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 1),
            3 => Self::new(-1, 0),
            4 => Self::new(0, -1),
            _ => Self::new(1, -1),
        }
    }

    /// `a + bσ ↦ (a + b) − bσ`.
    pub fn conj(&self) -> Self {
        EisensteinInt { re: &self.re + &self.si, si: -&self.si }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Field norm `N(a + bσ) = a² + ab + b²`.
    pub fn norm(&self) -> Integer {
        &self.re * &self.re + &self.re * &self.si + &self.si * &self.si
    }

    /// `Some(re)` when the σ-coefficient vanishes.
    pub fn as_rational_integer(&self) -> Option<&Integer> {
        self.si.is_zero().then_some(&self.re)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.si.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.si.is_zero()
    }
}

/// `(a + bσ)(c + dσ) = (ac − bd) + (ad + bc + bd)σ`.
pub fn eis_mul(a: &EisensteinInt, b: &EisensteinInt) -> EisensteinInt {
    let bd = &a.si * &b.si;
    EisensteinInt {
        re: &a.re * &b.re - &bd,
        si: &a.re * &b.si + &a.si * &b.re + bd,
    }
}

impl Mul for &EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: &EisensteinInt) -> EisensteinInt {
        eis_mul(self, rhs)
    }
}

impl Mul for EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: EisensteinInt) -> EisensteinInt {
        eis_mul(&self, &rhs)
    }
}

impl Add for &EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt { re: &self.re + &rhs.re, si: &self.si + &rhs.si }
    }
}

impl Add for EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: EisensteinInt) -> EisensteinInt {
        &self + &rhs
    }
}

impl AddAssign<&EisensteinInt> for EisensteinInt {
    fn add_assign(&mut self, rhs: &EisensteinInt) {
        self.re += &rhs.re;
        self.si += &rhs.si;
    }
}

impl Sub for &EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt { re: &self.re - &rhs.re, si: &self.si - &rhs.si }
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt { re: -&self.re, si: -&self.si }
    }
}

impl From<BigInt> for EisensteinInt {
    fn from(re: BigInt) -> Self {
        EisensteinInt { re, si: BigInt::zero() }
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.si.is_zero() {
            write!(f, "{}", self.re)
        } else if self.si.sign() == num_bigint::Sign::Minus {
            write!(f, "{} - {}σ", self.re, -&self.si)
        } else {
            write!(f, "{} + {}σ", self.re, self.si)
        }
    }
}
