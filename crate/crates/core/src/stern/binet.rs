use num_bigint::BigUint;

use crate::exact::{EisensteinInt, Natural};

/// Number of ones in the binary expansion of `n`.
pub fn s2(n: &Natural) -> u64 {
    n.count_ones()
}

/// Sum of `σ^{t(k)} σ̄^{t(n−k)}` over `0 <= k <= n`, for a digit-count function `t`.
///
/// Since `σ̄ = σ^{−1}` and `σ^6 = 1`, each term is `σ^{(t(k) − t(n−k)) mod 6}`;
/// the terms are tallied by residue and combined once in `Z[σ]`.
pub(crate) fn sigma_convolution(digits: &[u8], n: usize) -> EisensteinInt {
    let mut counts = [0u64; 6];
    for k in 0..=n {
        let e = (6 + digits[k] as i32 % 6 - digits[n - k] as i32 % 6) % 6;
        counts[e as usize] += 1;
    }
    combine_residues(&counts)
}

pub(crate) fn combine_residues(counts: &[u64; 6]) -> EisensteinInt {
    let mut acc = EisensteinInt::zero();
    for (e, &c) in counts.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let unit = EisensteinInt::sigma_pow(e as i64);
        acc += &(&unit * &EisensteinInt::from(num_bigint::BigInt::from(c)));
    }
    acc
}

/// `Σ_{k=0}^{n} σ^{s_2(k)} σ̄^{s_2(n−k)}`, which equals `a_{n+1}` with zero σ-part.
pub fn binet_sigma_stern(n: u64) -> EisensteinInt {
    let n = n as usize;
    let digits: Vec<u8> = (0..=n).map(|k| k.count_ones() as u8).collect();
    sigma_convolution(&digits, n)
}

/// `Σ_{2i+j=n} (C(i+j, i) mod 2)`.
///
/// By Lucas' theorem `C(i+j, i)` is odd exactly when `i` and `j` share no binary digit.
pub fn pascal_mod2_diagonal(n: u64) -> Natural {
    let count = (0..=n / 2).filter(|&i| i & (n - 2 * i) == 0).count();
    BigUint::from(count)
}
