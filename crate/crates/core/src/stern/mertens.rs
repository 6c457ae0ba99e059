use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{domain, Result};

/// Exponential sum over the reduced fractions `a_{2n}/a_{2n+1}` with denominator below `x`,
/// alongside the Mertens-type sum it should equal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentialSum {
    pub bound: u64,
    pub sum: Complex64,
    /// `Σ_{2 <= q < x} μ(q)` from an independent sieve.
    pub mertens: i64,
    /// Number of fractions summed.
    pub terms: u64,
}

impl ExponentialSum {
    pub fn deviation(&self) -> f64 {
        (self.sum - Complex64::new(self.mertens as f64, 0.0)).norm()
    }

    /// `|sum − mertens| <= 1e-6 · terms`.
    pub fn within_contract(&self) -> bool {
        self.deviation() <= 1e-6 * self.terms as f64
    }
}

/// Sums `e^{2πi·p/q}` over every reduced `p/q` in `(0, 1)` with `q < x`.
///
/// Consecutive Stern values `a_{2n}/a_{2n+1}` run through these fractions exactly
/// once, but their indices grow like `2^x`; walking the mediant tree between
/// `0/1` and `1/1` visits the same fractions and can stop as soon as a
/// denominator reaches `x`, because denominators only grow going down.
pub fn stern_exponential_sum(x: u64) -> Result<ExponentialSum> {
    if x < 2 {
        return Err(domain(format!("bound {x} must be at least 2")));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut terms = 0u64;
    // (left numerator, left denominator, right numerator, right denominator)
    let mut stack = vec![(0u64, 1u64, 1u64, 1u64)];
    while let Some((ln, ld, rn, rd)) = stack.pop() {
        let (mn, md) = (ln + rn, ld + rd);
        if md >= x {
            continue;
        }
        sum += Complex64::from_polar(1.0, TAU * mn as f64 / md as f64);
        terms += 1;
        stack.push((ln, ld, mn, md));
        stack.push((mn, md, rn, rd));
    }
    let mu = mobius_sieve(x as usize);
    let mertens = mu[2..x as usize].iter().map(|&m| m as i64).sum();
    Ok(ExponentialSum { bound: x, sum, mertens, terms })
}

/// `μ(0..=n)` by a linear sieve (`μ(0)` is reported as 0).
pub fn mobius_sieve(n: usize) -> Vec<i8> {
    let mut mu = vec![0i8; n + 1];
    if n >= 1 {
        mu[1] = 1;
    }
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let m = i * p;
            if m > n {
                break;
            }
            composite[m] = true;
            if i % p == 0 {
                mu[m] = 0;
                break;
            }
            mu[m] = -mu[i];
        }
    }
    mu
}
