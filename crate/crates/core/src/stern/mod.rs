//! Stern's diatomic sequence `a_0 = 0, a_1 = 1, a_{2n} = a_n, a_{2n+1} = a_n + a_{n+1}`
//! and the identities that hang off it.

mod bijection;
mod binet;
mod mertens;

pub use bijection::{stern_index, stern_pair, Branch, PairPath, SternPair};
pub use binet::{binet_sigma_stern, pascal_mod2_diagonal, s2};
pub(crate) use binet::sigma_convolution;
pub use mertens::{mobius_sieve, stern_exponential_sum, ExponentialSum};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::exact::Natural;

/// `a_n`, by descending the binary digits of `n` while carrying `(a_m, a_{m+1})`.
pub fn stern(n: impl Into<Natural>) -> Natural {
    descend(&n.into()).0
}

/// `(a_n, a_{n+1})`.
pub(crate) fn descend(n: &Natural) -> (Natural, Natural) {
    let (mut lo, mut hi) = (BigUint::zero(), BigUint::one());
    for i in (0..n.bits()).rev() {
        if n.bit(i) {
            lo += &hi;
        } else {
            hi += &lo;
        }
    }
    (lo, hi)
}

/// Memoized prefix `a_0 ..= a_len`, filled once and then shared read-only.
#[derive(Debug, Clone)]
pub struct SternTable {
    values: Vec<Natural>,
}

impl SternTable {
    pub fn new(len: usize) -> Self {
        let mut values = Vec::with_capacity(len + 1);
        values.push(BigUint::zero());
        if len >= 1 {
            values.push(BigUint::one());
        }
        for n in 2..=len {
            let v = if n % 2 == 0 {
                values[n / 2].clone()
            } else {
                &values[n / 2] + &values[n / 2 + 1]
            };
            values.push(v);
        }
        SternTable { values }
    }

    pub fn get(&self, n: usize) -> &Natural {
        &self.values[n]
    }

    /// Largest index held.
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

/// Row `j` of the diatomic array: `a_{2^j}, ..., a_{2^{j+1}}`.
pub fn diatomic_row(j: u32) -> Vec<Natural> {
    let start = BigUint::one() << j;
    let mut row = Vec::with_capacity((1usize << j) + 1);
    let (mut n, end) = (start.clone(), &start << 1);
    while n <= end {
        row.push(stern(n.clone()));
        n += 1u32;
    }
    row
}

/// `J(n) = (2^n − (−1)^n) / 3`.
pub fn jacobsthal(n: u32) -> Natural {
    let p = BigUint::one() << n;
    if n.is_multiple_of(2) {
        (p - 1u32) / 3u32
    } else {
        (p + 1u32) / 3u32
    }
}

/// `log_2 φ`.
pub fn log2_phi() -> f64 {
    ((1.0 + 5f64.sqrt()) / 2.0).log2()
}

/// `a_n / (3n)^{log_2 φ}` in double precision.
pub fn coons_tyler_ratio(n: impl Into<Natural>) -> f64 {
    let n = n.into();
    ratio_of(&stern(n.clone()), &n)
}

fn ratio_of(a: &Natural, n: &Natural) -> f64 {
    let a = a.to_f64().unwrap_or(f64::INFINITY);
    let n = n.to_f64().unwrap_or(f64::INFINITY);
    a / (3.0 * n).powf(log2_phi())
}

/// Maximum of [`coons_tyler_ratio`] over `lo ..= hi`, with the index where it occurs.
pub fn coons_tyler_max(table: &SternTable, lo: usize, hi: usize) -> (usize, f64) {
    let mut best = (lo, f64::NEG_INFINITY);
    for n in lo..=hi {
        let r = ratio_of(table.get(n), &BigUint::from(n));
        if r > best.1 {
            best = (n, r);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        v.into()
    }

    fn naturals(v: &[u64]) -> Vec<Natural> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(stern(5u32), nat(3));
        assert_eq!(stern(0u32), nat(0));
        assert_eq!(stern(21u32), nat(8));
    }

    #[test]
    fn printed_listing() {
        let listed = [1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1, 5];
        for (i, &v) in listed.iter().enumerate() {
            assert_eq!(stern(i as u64 + 1), nat(v));
        }
    }

    #[test]
    fn descent_matches_table() {
        let t = SternTable::new(1 << 14);
        for n in 0..=(1usize << 14) {
            assert_eq!(&stern(n as u64), t.get(n), "n = {n}");
        }
    }

    #[test]
    fn diatomic_rows() {
        assert_eq!(diatomic_row(0), naturals(&[1, 1]));
        assert_eq!(diatomic_row(2), naturals(&[1, 3, 2, 3, 1]));
        assert_eq!(
            diatomic_row(4),
            naturals(&[1, 5, 4, 7, 3, 8, 5, 7, 2, 7, 5, 8, 3, 7, 4, 5, 1])
        );
        for j in 0..10 {
            let row = diatomic_row(j);
            assert_eq!(row.len(), (1 << j) + 1);
            let rev: Vec<_> = row.iter().rev().cloned().collect();
            assert_eq!(row, rev, "rows are palindromes");
        }
    }

    #[test]
    fn jacobsthal_values_and_fibonacci_embedding() {
        assert_eq!(jacobsthal(1), nat(1));
        assert_eq!(jacobsthal(4), nat(5));
        assert_eq!(jacobsthal(6), nat(21));
        for n in 1..=30u32 {
            assert_eq!(stern(jacobsthal(n)), crate::exact::fib(n as u64), "n = {n}");
        }
    }

    #[test]
    fn modified_fibonacci_recurrence() {
        let t = SternTable::new(1 << 16);
        for n in 2..(1usize << 16) {
            let (prev, cur) = (t.get(n - 1), t.get(n));
            let expect = cur + prev - (prev % cur) * 2u32;
            assert_eq!(t.get(n + 1), &expect, "n = {n}");
        }
    }

    #[test]
    fn ratio_examples() {
        let c = log2_phi();
        assert!((coons_tyler_ratio(1u32) - 3f64.powf(-c)).abs() < 1e-12);
        assert!((coons_tyler_ratio(1u32) - 0.4666).abs() < 1e-3);
        assert!((coons_tyler_ratio(3u32) - 2.0 * 9f64.powf(-c)).abs() < 1e-12);
        assert!((coons_tyler_ratio(3u32) - 0.4357).abs() < 1e-3);
        let at_j30 = coons_tyler_ratio(jacobsthal(30));
        assert!((at_j30 - 1.0 / 5f64.sqrt()).abs() < 1e-6, "{at_j30}");
    }

    #[test]
    fn determinant_identity_on_dyadic_blocks() {
        // a_{m+1} a_{n+1} − a_m a_n = 1 whenever m + n = 2^j − 1.
        let t = SternTable::new(1 << 16);
        for j in 1..=16u32 {
            let total = (1usize << j) - 1;
            for m in 0..=total {
                let n = total - m;
                let lhs = t.get(m + 1) * t.get(n + 1) - t.get(m) * t.get(n);
                assert_eq!(lhs, nat(1), "j = {j}, m = {m}");
            }
        }
    }
}
