use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::oplus;
use crate::boxfn::conway_f;
use crate::error::{domain, Error, Result};
use crate::exact::{ratio, DyadicRational, ExactRational, Integer, Natural};
use crate::stern::stern;

fn oplus_checked(x: &Natural, y: &Natural, at: &str) -> Result<Natural> {
    oplus(x, y).map_err(|e| Error::Integrity(format!("b-recurrence at index {at}: {e}")))
}

/// `(b_n, b_{n+1})` by binary descent from `(b_1, b_2) = (0, 0)`.
pub(crate) fn b_descend(n: &Natural) -> Result<(Natural, Natural)> {
    if n.is_zero() {
        return Err(domain("b is indexed from 1"));
    }
    let (mut lo, mut hi) = (BigUint::zero(), BigUint::zero());
    for i in (0..n.bits() - 1).rev() {
        let s = oplus_checked(&lo, &hi, &n.to_string())?;
        if n.bit(i) {
            lo = s;
        } else {
            hi = s;
        }
    }
    Ok((lo, hi))
}

/// `b_n` for `n >= 1`, from the defining recurrence.
///
/// Fails with [`Error::Integrity`] only if a radicand along the way were not a
/// perfect square, which would contradict integrality of the sequence.
pub fn b(n: impl Into<Natural>) -> Result<Natural> {
    Ok(b_descend(&n.into())?.0)
}

/// `b_k = a_{2^{j+1}−k} · a_{k−2^j}` with `2^j <= k <= 2^{j+1}`.
pub fn b_closed(k: impl Into<Natural>) -> Result<Natural> {
    let k = k.into();
    if k.is_zero() {
        return Err(domain("b is indexed from 1"));
    }
    let low = BigUint::one() << (k.bits() - 1);
    let high = &low << 1;
    Ok(stern(&high - &k) * stern(&k - &low))
}

/// Prefix `b_1 ..= b_len` from the recurrence. Slot 0 is unused and holds 0.
#[derive(Debug, Clone)]
pub struct BTable {
    values: Vec<Natural>,
}

impl BTable {
    pub fn new(len: usize) -> Result<Self> {
        let mut values = vec![BigUint::zero(); len.max(1) + 1];
        for n in 2..=len {
            values[n] = if n % 2 == 0 {
                values[n / 2].clone()
            } else {
                oplus_checked(&values[n / 2], &values[n / 2 + 1], &n.to_string())?
            };
        }
        Ok(BTable { values })
    }

    pub fn get(&self, n: usize) -> &Natural {
        assert!(n >= 1, "b is indexed from 1");
        &self.values[n]
    }

    pub fn len(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `g(k / 2^n) = b_k / b_{2^n+k}` on `(0, 1]`.
///
/// At `1` the quotient is `0/0`; the continuous value `f(2·1 − 1) = 1` is used.
pub fn g(d: &DyadicRational) -> Result<ExactRational> {
    if d.numerator().is_zero() || !d.in_unit_interval() {
        return Err(domain(format!("{d} is outside (0, 1]")));
    }
    if *d == DyadicRational::one() {
        return conway_f(&DyadicRational::one());
    }
    let k = d.numerator().clone();
    let top = (BigUint::one() << d.exponent()) + &k;
    let den = b(top)?;
    if den.is_zero() {
        return Err(Error::Integrity(format!("b vanishes in the denominator of g({d})")));
    }
    Ok(ratio(&b(k)?, &den))
}

/// `(k / 2^depth, g(k / 2^depth))` for `k = 1 ..= 2^depth`.
pub fn sample_g(depth: u32) -> Result<Vec<(ExactRational, ExactRational)>> {
    if depth > crate::boxfn::MAX_SAMPLE_DEPTH {
        return Err(domain(format!("depth {depth} exceeds {}", crate::boxfn::MAX_SAMPLE_DEPTH)));
    }
    let size = 1usize << depth;
    let table = BTable::new(2 * size)?;
    let mut out = Vec::with_capacity(size);
    for k in 1..size {
        let x = ratio(&BigUint::from(k), &BigUint::from(size));
        out.push((x, ratio(table.get(k), table.get(size + k))));
    }
    out.push((ExactRational::one(), g(&DyadicRational::one())?));
    Ok(out)
}

/// `c_n = A·a_n² + B·b_n`.
pub fn c_general(a_coef: &Integer, b_coef: &Integer, n: impl Into<Natural>) -> Result<Integer> {
    let n = n.into();
    let a = BigInt::from(stern(n.clone()));
    Ok(a_coef * &a * &a + b_coef * BigInt::from(b(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oplus::{oplus_n_exact, ominus_n_exact};
    use crate::stern::SternTable;
    use num_bigint::Sign;
    use num_rational::BigRational;

    fn nat(v: u64) -> Natural {
        v.into()
    }

    fn q(p: i64, d: i64) -> ExactRational {
        BigRational::new(p.into(), d.into())
    }

    fn dy(k: u64, n: u64) -> DyadicRational {
        DyadicRational::new(k, n)
    }

    #[test]
    fn printed_listing() {
        let listed = [
            0, 0, 1, 0, 2, 1, 2, 0, 3, 2, 6, 1, 6, 2, 3, 0, 4, 3, 10, 2, 15, 6, 12, 1, 12, 6, 15,
        ];
        let t = BTable::new(27).unwrap();
        for (i, &v) in listed.iter().enumerate() {
            assert_eq!(b(i as u64 + 1).unwrap(), nat(v), "n = {}", i + 1);
            assert_eq!(t.get(i + 1), &nat(v));
        }
        assert!(b(0u32).is_err());
    }

    #[test]
    fn tabular_rows_and_their_column_steps() {
        let rows = [vec![0], vec![0, 1], vec![0, 2, 1, 2], vec![0, 3, 2, 6, 1, 6, 2, 3]];
        for (j, row) in rows.iter().enumerate() {
            let got: Vec<Natural> = (0..row.len()).map(|k| b((1u64 << j) + k as u64).unwrap()).collect();
            assert_eq!(got, row.iter().map(|&v| nat(v)).collect::<Vec<_>>());
        }
        let printed_start = [0, 4, 3, 10, 2, 15, 6, 12];
        for (k, &v) in printed_start.iter().enumerate() {
            assert_eq!(b(16 + k as u64).unwrap(), nat(v));
        }
        // Column steps 0,1,1,4,1,9,4,9 are the squares a_k².
        let steps = [0u64, 1, 1, 4, 1, 9, 4, 9];
        for (k, &s) in steps.iter().enumerate() {
            let d = b(32 + k as u64).unwrap() - b(16 + k as u64).unwrap();
            assert_eq!(d, nat(s));
            let a = stern(k as u64);
            assert_eq!(&a * &a, nat(s));
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(b_closed(5u32).unwrap(), nat(2));
        assert_eq!(b_closed(12u32).unwrap(), nat(1));
        for j in 0..=20 {
            assert_eq!(b_closed(1u64 << j).unwrap(), nat(0));
        }
    }

    #[test]
    fn closed_form_matches_recurrence_to_2_16() {
        let t = BTable::new(1 << 16).unwrap();
        for k in 1..=(1usize << 16) {
            assert_eq!(&b_closed(k as u64).unwrap(), t.get(k), "k = {k}");
        }
    }

    #[test]
    fn descent_matches_table() {
        let t = BTable::new(5000).unwrap();
        for k in 1..=5000usize {
            assert_eq!(&b(k as u64).unwrap(), t.get(k));
        }
    }

    #[test]
    fn g_examples() {
        assert_eq!(g(&dy(3, 2)).unwrap(), q(1, 2));
        assert_eq!(g(&dy(1, 1)).unwrap(), q(0, 1));
        assert_eq!(g(&dy(1, 0)).unwrap(), q(1, 1));
        assert!(g(&DyadicRational::zero()).is_err());
        assert!(g(&dy(3, 1)).is_err());
    }

    #[test]
    fn g_is_well_defined_and_denominators_positive() {
        let n = 10u32;
        let t = BTable::new(1 << (n + 3)).unwrap();
        for k in 1..(1usize << n) {
            let den = t.get((1 << n) + k);
            assert!(!den.is_zero(), "k = {k}");
            let base = ratio(t.get(k), den);
            for extra in 1..3 {
                let (k2, n2) = (k << extra, n + extra);
                assert_eq!(ratio(t.get(k2), t.get((1 << n2) + k2)), base);
            }
            assert_eq!(g(&dy(k as u64, n as u64)).unwrap(), base);
        }
    }

    // f(k/2^n) straight from Stern values, as the oracle side.
    fn f_of(table: &SternTable, k: usize, n: u32) -> ExactRational {
        ratio(table.get(k), table.get((1usize << n) + k))
    }

    #[test]
    fn g_in_terms_of_box_function() {
        let n = 12u32;
        let size = 1usize << n;
        let a = SternTable::new(4 * size);
        let bt = BTable::new(2 * size).unwrap();
        let one = ExactRational::one();
        for k in 1..size {
            let gx = ratio(bt.get(k), bt.get(size + k));
            // x = k/2^n lies in (2^{−j−1}, 2^{−j}) unless it is a power of two.
            if k.is_power_of_two() {
                continue;
            }
            let j = (n - 1 - k.ilog2()) as i64;
            // 2^{j+1} x − 1 = (k·2^{j+1} − 2^n) / 2^n
            let first = f_of(&a, (k << (j + 1)) - size, n);
            let rhs = if j == 0 {
                first
            } else {
                let f2x = f_of(&a, 2 * k, n);
                first * (&one - BigRational::from_integer(j.into()) * f2x)
            };
            assert_eq!(gx, rhs, "x = {k}/2^{n}");
        }
    }

    #[test]
    fn g_on_upper_half_is_shifted_box_function() {
        let n = 12u32;
        let size = 1usize << n;
        let a = SternTable::new(2 * size);
        for k in size / 2..=size {
            let gx = g(&dy(k as u64, n as u64)).unwrap();
            assert_eq!(gx, f_of(&a, 2 * k - size, n), "x = {k}/2^{n}");
        }
    }

    #[test]
    fn arithmetic_columns() {
        let a = SternTable::new(1 << 15);
        let t = BTable::new(1 << 16).unwrap();
        for j in 0..=14u32 {
            for k in 0..(1usize << j) {
                let ak = a.get(k);
                assert_eq!(t.get((2 << j) + k), &(ak * ak + t.get((1 << j) + k)), "j = {j}, k = {k}");
            }
        }
    }

    #[test]
    fn markov_like_quadratic_form() {
        let t = BTable::new(20_002).unwrap();
        for k in 1..=10_000usize {
            let (x, y, z) = (
                BigInt::from(t.get(k).clone()),
                BigInt::from(t.get(k + 1).clone()),
                BigInt::from(t.get(2 * k + 1).clone()),
            );
            let s = &x + &y + &z;
            let lhs = (&x * &x + &y * &y + &z * &z) * 2 - &s * &s;
            assert_eq!(lhs, BigInt::from(1), "k = {k}");
            // z = x ⊕ y and x ⊖ y are the two roots for fixed (x, y).
            let other = super::super::ominus(t.get(k), t.get(k + 1)).unwrap();
            let s2 = &x + &y + &other;
            let lhs2 = (&x * &x + &y * &y + &other * &other) * 2 - &s2 * &s2;
            assert_eq!(lhs2, BigInt::from(1));
        }
    }

    #[test]
    fn square_root_identity_for_neighbours() {
        let n = 1usize << 14;
        let a = SternTable::new(n + 1);
        let t = BTable::new(n + 1).unwrap();
        for k in 1..=n {
            let (ak, ak1, bk, bk1) = (a.get(k), a.get(k + 1), t.get(k), t.get(k + 1));
            let (root, perfect) = crate::exact::isqrt_exact(&(bk * bk1 * 4u32 + 1u32));
            assert!(perfect, "k = {k}");
            assert_eq!(ak * ak * bk1 + ak1 * ak1 * bk + 1u32, ak * ak1 * root, "k = {k}");
        }
    }

    #[test]
    fn c_general_examples() {
        let i = |v: i64| Integer::from(v);
        assert_eq!(c_general(&i(1), &i(-1), 3u32).unwrap(), i(3));
        assert_eq!(c_general(&i(0), &i(1), 21u32).unwrap(), i(15));
        assert_eq!(c_general(&i(1), &i(0), 5u32).unwrap(), i(9));
        assert_eq!(c_general(&i(1), &i(-1), 1u32).unwrap(), i(1));
        assert_eq!(c_general(&i(1), &i(-1), 2u32).unwrap(), i(1));
    }

    #[test]
    fn c_general_satisfies_shifted_oplus_recurrence() {
        let n_max = 1usize << 12;
        let a = SternTable::new(2 * n_max + 1);
        let t = BTable::new(2 * n_max + 1).unwrap();
        for (ac, bc) in [(1i64, -1i64), (2, 3), (0, 1), (1, 0)] {
            let (ai, bi) = (Integer::from(ac), Integer::from(bc));
            let radical_shift = &ai * &bi * 4 + &bi * &bi;
            let c = |k: usize| {
                let av = BigInt::from(a.get(k).clone());
                &ai * &av * &av + &bi * BigInt::from(t.get(k).clone())
            };
            assert_eq!(c(1), ai);
            assert_eq!(c(2), ai);
            for n in 1..=n_max {
                assert_eq!(c(2 * n), c(n));
                let next = oplus_n_exact(&c(n), &c(n + 1), &radical_shift)
                    .unwrap_or_else(|e| panic!("(A,B)=({ac},{bc}), n={n}: {e}"));
                assert_eq!(next, c(2 * n + 1), "(A,B)=({ac},{bc}), n={n}");
                assert_eq!(ominus_n_exact(&next, &c(n + 1), &radical_shift).unwrap(), c(n));
            }
        }
        // N = −3 starts 1, 1, 3, ...
        let c3 = c_general(&Integer::from(1), &Integer::from(-1), 3u32).unwrap();
        assert_eq!(c3.sign(), Sign::Plus);
    }

    #[test]
    fn sample_g_grid() {
        let s = sample_g(8).unwrap();
        assert_eq!(s.len(), 256);
        assert!(s.contains(&(q(3, 4), q(1, 2))));
        assert_eq!(s.last().unwrap(), &(q(1, 1), q(1, 1)));
    }
}
