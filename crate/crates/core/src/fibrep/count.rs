use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::beatty::{floor_n_over_phi, floor_n_over_phi2};
use super::{rho2, t_shift};
use crate::error::{Error, Result};
use crate::exact::{fibs_through, Natural};

/// `R_0 ..= R_limit` as the coefficients of `Π_{i>=2} (1 + x^{F_i})`,
/// i.e. a subset-sum count over distinct Fibonacci weights.
#[derive(Debug, Clone)]
pub struct RTable {
    values: Vec<Natural>,
}

impl RTable {
    pub fn new(limit: usize) -> Self {
        let mut values = vec![BigUint::zero(); limit + 1];
        values[0] = BigUint::one();
        for w in fibs_through(&BigUint::from(limit)) {
            let w = usize::try_from(&w).expect("weight below limit");
            for n in (w..=limit).rev() {
                let (head, tail) = values.split_at_mut(n);
                tail[0] += &head[n - w];
            }
        }
        RTable { values }
    }

    pub fn get(&self, n: usize) -> &Natural {
        &self.values[n]
    }

    pub fn len(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[Natural] {
        &self.values
    }
}

/// Number of ways to write `n` as a sum of distinct Fibonacci numbers `F_2, F_3, ...`.
pub fn r_count(n: u64) -> Natural {
    let n = usize::try_from(n).expect("index fits in memory");
    RTable::new(n).values.swap_remove(n)
}

/// Every `n >= 1` is exactly one of `ρ₂(m)` (`m >= 1`) or `T(m)` (`m >= 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShiftPreimage {
    Rho2(Natural),
    T(Natural),
}

/// Finds the preimage of `n` under `ρ₂` or `T`.
///
/// Candidates come from a certified bracket around `n/φ²` and `n/φ`; each one
/// is confirmed by recomputing the shift exactly.
pub fn classify(n: &Natural) -> Result<ShiftPreimage> {
    if n.is_zero() {
        return Err(Error::Domain("0 is neither ρ₂(m) for m >= 1 nor T(m)".into()));
    }
    let mut found = None;
    let guess = floor_n_over_phi2(n);
    for m in candidates(&guess, 1, 1) {
        if m.is_zero() {
            continue;
        }
        if rho2(&m) == *n {
            found = Some(ShiftPreimage::Rho2(m));
            break;
        }
    }
    let guess = floor_n_over_phi(n);
    for m in candidates(&guess, 2, 1) {
        if t_shift(&m) == *n {
            if found.is_some() {
                return Err(Error::Integrity(format!("{n} is both a ρ₂ and a T value")));
            }
            found = Some(ShiftPreimage::T(m));
            break;
        }
    }
    found.ok_or_else(|| Error::Integrity(format!("{n} is neither a ρ₂ nor a T value")))
}

fn candidates(center: &Natural, below: u32, above: u32) -> Vec<Natural> {
    let lo = if *center >= BigUint::from(below) { center - below } else { BigUint::zero() };
    let hi = center + above;
    let mut out = Vec::new();
    let mut m = lo;
    while m <= hi {
        out.push(m.clone());
        m += 1u32;
    }
    out
}

/// `R_n` from `R_{ρ₂(m)} = R_m + R_{m−1}`, `R_{T(m)} = R_m`, `R_0 = 1`, memoized.
#[derive(Debug, Clone, Default)]
pub struct RecursiveR {
    memo: HashMap<Natural, Natural>,
}

impl RecursiveR {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: &Natural) -> Result<Natural> {
        if n.is_zero() {
            return Ok(BigUint::one());
        }
        if let Some(v) = self.memo.get(n) {
            return Ok(v.clone());
        }
        let v = match classify(n)? {
            ShiftPreimage::Rho2(m) => self.get(&m)? + self.get(&(&m - 1u32))?,
            ShiftPreimage::T(m) => self.get(&m)?,
        };
        self.memo.insert(n.clone(), v.clone());
        Ok(v)
    }
}

pub fn r_count_recursive(n: impl Into<Natural>) -> Result<Natural> {
    RecursiveR::new().get(&n.into())
}

/// `R_0 ..= R_limit` from the shift recursion, filled in increasing order.
pub fn r_count_recursive_table(limit: usize) -> Result<Vec<Natural>> {
    let mut values: Vec<Natural> = Vec::with_capacity(limit + 1);
    values.push(BigUint::one());
    for n in 1..=limit {
        let at = |m: &Natural| usize::try_from(m).expect("preimage below n");
        let v = match classify(&BigUint::from(n))? {
            ShiftPreimage::Rho2(m) => &values[at(&m)] + &values[at(&m) - 1],
            ShiftPreimage::T(m) => values[at(&m)].clone(),
        };
        values.push(v);
    }
    Ok(values)
}
