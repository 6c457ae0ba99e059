use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::Natural;

/// `F_n` with `F_0 = 0`, `F_1 = F_2 = 1`, by fast doubling.
pub fn fib(n: u64) -> Natural {
    fib_pair(n).0
}

// (F_n, F_{n+1})
fn fib_pair(n: u64) -> (Natural, Natural) {
    if n == 0 {
        return (BigUint::zero(), BigUint::one());
    }
    let (a, b) = fib_pair(n / 2);
    // F_2k = F_k (2F_{k+1} - F_k), F_2k+1 = F_k^2 + F_{k+1}^2
    let c = &a * (&b * 2u32 - &a);
    let d = &a * &a + &b * &b;
    if n.is_multiple_of(2) {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

/// The Zeckendorf weights `F_2, F_3, ...` up to and including the last one `<= limit`.
pub fn fibs_through(limit: &Natural) -> Vec<Natural> {
    let mut out = Vec::new();
    let (mut a, mut b) = (BigUint::one(), BigUint::from(2u32));
    while a <= *limit {
        out.push(a.clone());
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    out
}
