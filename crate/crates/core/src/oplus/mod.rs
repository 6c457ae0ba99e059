//! The operation `a ⊕ b = a + b + √(4ab + 1)`, its relatives `⊖` and `⊕_N`,
//! and the sequence `b_1 = 0, b_{2n} = b_n, b_{2n+1} = b_n ⊕ b_{n+1}` built from it.
//!
//! Everything here is exact: a radicand that is not a perfect square is an
//! error, never a silent switch to floating point. [`oplus_n`] and
//! [`oplus_n_complex`] are the separate floating entry points.

mod bijection;
mod sequence;

pub use bijection::{b_pair, b_pair_index, b_pair_path, m_oplus, BPair, MStep};
pub use sequence::{b, b_closed, c_general, g, sample_g, BTable};

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_traits::Signed;

use crate::error::{domain, Error, Result};
use crate::exact::{isqrt_exact, Integer, Natural};

fn exact_root(radicand: &Integer) -> Result<Integer> {
    if radicand.is_negative() {
        return Err(Error::NonSquareRadicand(radicand.to_string()));
    }
    let (root, perfect) = isqrt_exact(radicand.magnitude());
    if !perfect {
        return Err(Error::NonSquareRadicand(radicand.to_string()));
    }
    Ok(BigInt::from_biguint(Sign::Plus, root))
}

/// `a ⊕ b`, defined when `4ab + 1` is a perfect square.
pub fn oplus(a: &Natural, b: &Natural) -> Result<Natural> {
    let root = exact_root(&BigInt::from(a * b * 4u32 + 1u32))?;
    Ok(a + b + root.magnitude())
}

/// `a ⊖ b`; equals `−1` only at `a = b = 0`.
pub fn ominus(a: &Natural, b: &Natural) -> Result<Integer> {
    let root = exact_root(&BigInt::from(a * b * 4u32 + 1u32))?;
    Ok(BigInt::from(a + b) - root)
}

/// `x ⊕_N y = x + y + √(4xy + N)` over the integers.
pub fn oplus_n_exact(x: &Integer, y: &Integer, n: &Integer) -> Result<Integer> {
    let root = exact_root(&(x * y * 4 + n))?;
    Ok(x + y + root)
}

/// `x ⊖_N y = x + y − √(4xy + N)` over the integers.
pub fn ominus_n_exact(x: &Integer, y: &Integer, n: &Integer) -> Result<Integer> {
    let root = exact_root(&(x * y * 4 + n))?;
    Ok(x + y - root)
}

/// Real `x ⊕_N y`; a negative radicand is a domain error.
pub fn oplus_n(x: f64, y: f64, n: f64) -> Result<f64> {
    let radicand = 4.0 * x * y + n;
    if radicand < 0.0 {
        return Err(domain(format!("radicand {radicand} is negative")));
    }
    Ok(x + y + radicand.sqrt())
}

/// `√z := √r e^{iθ/2}` with `z = re^{iθ}`, `θ ∈ [0, 2π)`.
pub fn sqrt_upper(z: Complex64) -> Complex64 {
    let theta = z.arg().rem_euclid(std::f64::consts::TAU);
    Complex64::from_polar(z.norm().sqrt(), theta / 2.0)
}

/// Complex `x ⊕_N y` using [`sqrt_upper`].
pub fn oplus_n_complex(x: Complex64, y: Complex64, n: Complex64) -> Complex64 {
    x + y + sqrt_upper(4.0 * x * y + n)
}

/// Complex `x ⊖_N y` using [`sqrt_upper`].
pub fn ominus_n_complex(x: Complex64, y: Complex64, n: Complex64) -> Complex64 {
    x + y - sqrt_upper(4.0 * x * y + n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat(v: u64) -> Natural {
        v.into()
    }

    fn int(v: i64) -> Integer {
        v.into()
    }

    #[test]
    fn oplus_examples() {
        assert_eq!(oplus(&nat(0), &nat(0)).unwrap(), nat(1));
        assert_eq!(oplus(&nat(2), &nat(1)).unwrap(), nat(6));
        assert_eq!(oplus(&nat(2), &nat(6)).unwrap(), nat(15));
        assert!(matches!(oplus(&nat(1), &nat(1)), Err(Error::NonSquareRadicand(_))));
    }

    #[test]
    fn ominus_examples() {
        assert_eq!(ominus(&nat(15), &nat(6)).unwrap(), int(2));
        assert_eq!(ominus(&nat(0), &nat(0)).unwrap(), int(-1));
        let s = oplus(&nat(3), &nat(10)).unwrap();
        assert_eq!(ominus(&s, &nat(10)).unwrap(), int(3));
        assert!(ominus(&nat(2), &nat(2)).is_err());
    }

    #[test]
    fn oplus_n_examples() {
        assert_eq!(oplus_n(1.0, 1.0, -3.0).unwrap(), 3.0);
        assert_eq!(oplus_n(7.5, 0.0, 1.0).unwrap(), 8.5);
        assert_eq!(oplus_n(1.0, 2.0, 1.0).unwrap(), 6.0);
        assert!(oplus_n(1.0, 1.0, -5.0).is_err());
        assert_eq!(oplus_n_exact(&int(1), &int(1), &int(-3)).unwrap(), int(3));
        assert!(oplus_n_exact(&int(1), &int(1), &int(-5)).is_err());
    }

    #[test]
    fn fibonacci_products_satisfy_oplus_recurrence() {
        let f = |n: u64| crate::exact::fib(n);
        for n in 2..=30u64 {
            let x_prev = f(n - 1) * f(n);
            let x_cur = f(n) * f(n + 1);
            assert_eq!(oplus(&x_cur, &x_prev).unwrap(), f(n + 1) * f(n + 2), "n = {n}");
        }
    }

    #[test]
    fn complex_spot_check() {
        let n = Complex64::new(-3.0, 2.0);
        let (a, b) = (Complex64::new(1.5, 0.25), Complex64::new(0.5, -1.0));
        // For fixed (x, y), x ⊕_N y and x ⊖_N y are the two roots z of
        // 2(x² + y² + z²) − (x + y + z)² = N.
        for z in [oplus_n_complex(a, b, n), ominus_n_complex(a, b, n)] {
            let form = 2.0 * (a * a + b * b + z * z) - (a + b + z) * (a + b + z);
            assert!((form - n).norm() < 1e-9, "{z}");
        }
        // On real data with a nonnegative radicand it agrees with the real operation
        // and ⊖_N undoes ⊕_N.
        let (x, y, m) = (Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0), Complex64::new(-3.0, 0.0));
        let s = oplus_n_complex(x, y, m);
        assert!((s.re - oplus_n(1.0, 2.0, -3.0).unwrap()).abs() < 1e-12 && s.im.abs() < 1e-12);
        assert!((ominus_n_complex(s, y, m) - x).norm() < 1e-9);
        let r = sqrt_upper(Complex64::new(-4.0, 0.0));
        assert!((r - Complex64::new(0.0, 2.0)).norm() < 1e-12);
        assert!(sqrt_upper(Complex64::new(0.0, -1.0)).im >= 0.0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2_000))]

        #[test]
        fn unimodular_products(a in 1u64..=10_000, b in 1u64..=10_000, c in 1u64..=10_000) {
            // Pick d so that ad − bc = ±1 when possible.
            for sign in [1i128, -1] {
                let t = b as i128 * c as i128 + sign;
                if t > 0 && t % a as i128 == 0 {
                    let d = (t / a as i128) as u64;
                    if d == 0 || d > 10_000 { continue; }
                    let lhs = oplus(&nat(a * c), &nat(b * d)).unwrap();
                    prop_assert_eq!(lhs, nat(a + b) * nat(c + d));
                }
            }
        }

        #[test]
        fn ominus_inverts_oplus(a in 0u64..5_000, b in 0u64..5_000) {
            if let Ok(s) = oplus(&nat(a), &nat(b)) {
                prop_assert_eq!(ominus(&s, &nat(b)).unwrap(), int(a as i64));
            }
        }
    }

    #[test]
    fn unimodular_products_from_farey_neighbours() {
        // Consecutive Farey fractions b/a < d/c have ad − bc = ±1 exactly.
        let n = 60u64;
        let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, n);
        while c <= n {
            let k = (n + b) / d;
            let (na, nb) = (c, d);
            c = k * c - a;
            d = k * d - b;
            a = na;
            b = nb;
            if a > 0 && b > 0 && c > 0 && d > 0 {
                let lhs = oplus(&nat(a * c), &nat(b * d)).unwrap();
                assert_eq!(lhs, nat(a + b) * nat(c + d));
            }
        }
    }
}
