use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{ToPrimitive, Zero};

use super::count::{RTable, RecursiveR};
use crate::error::{domain, Result};
use crate::exact::{fib, ratio, CfWord, ExactRational, Natural};

/// A fraction kept as the literal pair `num / den`, not reduced, so that
/// mediants are taken on the actual counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RawFraction {
    pub num: Natural,
    pub den: Natural,
}

impl RawFraction {
    pub fn to_rational(&self) -> ExactRational {
        ratio(&self.num, &self.den)
    }

    pub fn to_f64(&self) -> f64 {
        self.num.to_f64().unwrap_or(f64::NAN) / self.den.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for RawFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `p/q * p'/q' = (p + p')/(q + q')`.
pub fn mediant(a: &RawFraction, b: &RawFraction) -> RawFraction {
    RawFraction { num: &a.num + &b.num, den: &a.den + &b.den }
}

fn check_domain(k: &Natural, n: u64) -> Result<()> {
    if n == 0 || *k >= fib(n - 1) {
        return Err(domain(format!("q(k, F_n) needs k < F_(n-1); got k = {k}, n = {n}")));
    }
    Ok(())
}

/// Evaluates `q(k, F_n) = R_k / R_{F_n + k}` with a shared memo for `R`.
#[derive(Debug, Clone, Default)]
pub struct QEvaluator {
    r: RecursiveR,
}

impl QEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn q_raw(&mut self, k: &Natural, n: u64) -> Result<RawFraction> {
        check_domain(k, n)?;
        let num = self.r.get(k)?;
        let den = self.r.get(&(fib(n) + k))?;
        Ok(RawFraction { num, den })
    }

    pub fn q(&mut self, k: &Natural, n: u64) -> Result<ExactRational> {
        Ok(self.q_raw(k, n)?.to_rational())
    }

    /// `q` at the two grid points `⌊x F_m⌋` and `⌈x F_m⌉` around `x`, in increasing order.
    ///
    /// `x` must lie in `[0, 1/φ]`; the upper grid point is clamped into the domain.
    pub fn bracket(&mut self, x: &ExactRational, m: u64) -> Result<(ExactRational, ExactRational)> {
        if m < 3 {
            return Err(domain("bracket needs m >= 3"));
        }
        if x.is_negative_or_above_inverse_phi() {
            return Err(domain(format!("{x} is outside [0, 1/φ]")));
        }
        let scaled = x * ExactRational::from_integer(BigInt::from(fib(m)));
        let (lo, rem) = scaled.numer().div_rem(scaled.denom());
        let lo = lo.to_biguint().expect("x is nonnegative");
        let limit = fib(m - 1) - 1u32;
        let hi = if rem.is_zero() { lo.clone() } else { &lo + 1u32 };
        let lo = lo.min(limit.clone());
        let hi = hi.min(limit);
        let a = self.q(&lo, m)?;
        let b = self.q(&hi, m)?;
        Ok(if a <= b { (a, b) } else { (b, a) })
    }

    /// Floating-point convenience over [`bracket`](Self::bracket); returns the midpoint.
    pub fn approx(&mut self, x: f64, m: u64) -> Result<f64> {
        let x = ExactRational::from_float(x).ok_or_else(|| domain("x is not finite"))?;
        let (a, b) = self.bracket(&x, m)?;
        Ok((a.to_f64().unwrap_or(f64::NAN) + b.to_f64().unwrap_or(f64::NAN)) / 2.0)
    }
}

trait InDomain {
    fn is_negative_or_above_inverse_phi(&self) -> bool;
}

impl InDomain for ExactRational {
    // x <= 1/φ  iff  x >= 0 and x² + x <= 1
    fn is_negative_or_above_inverse_phi(&self) -> bool {
        let one = ExactRational::from_integer(1.into());
        *self.numer() < BigInt::zero() || self * self + self > one
    }
}

pub fn q(k: impl Into<Natural>, n: u64) -> Result<ExactRational> {
    QEvaluator::new().q(&k.into(), n)
}

/// `(k/F_m, q(k, F_m))` for `k = 0 .. F_{m−1} − 1`, from a single DP table.
pub fn sample_q(m: u64) -> Result<Vec<(ExactRational, ExactRational)>> {
    if !(3..=30).contains(&m) {
        return Err(domain(format!("sample depth {m} outside 3..=30")));
    }
    let fm = fib(m);
    let count = usize::try_from(fib(m - 1)).expect("small");
    let table = RTable::new(usize::try_from(fib(m + 1)).expect("small"));
    let base = usize::try_from(&fm).expect("small");
    Ok((0..count)
        .map(|k| (ratio(&BigUint::from(k), &fm), ratio(table.get(k), table.get(base + k))))
        .collect())
}

fn phi() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// `Σ_{k=1}^{depth} (−1)^{k+1} / φ^{2(c_1+...+c_k)−1}` over the first `depth` terms of `cf`.
pub fn q_inverse_series(cf: &CfWord, depth: usize) -> Result<f64> {
    if depth == 0 {
        return Err(domain("series depth must be positive"));
    }
    Ok(series(cf.terms().iter().take(depth)))
}

/// The same series for the infinite continued fraction repeating `period`.
pub fn q_inverse_series_periodic(period: &CfWord, depth: usize) -> Result<f64> {
    if depth == 0 {
        return Err(domain("series depth must be positive"));
    }
    Ok(series(period.terms().iter().cycle().take(depth)))
}

fn series<'a>(terms: impl Iterator<Item = &'a Natural>) -> f64 {
    let inv = 1.0 / phi();
    let mut partial = 0f64;
    let mut sum = 0.0;
    for (k, c) in terms.enumerate() {
        partial += c.to_f64().unwrap_or(f64::INFINITY);
        let term = inv.powf(2.0 * partial - 1.0);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// Endpoints of the interval where `Q` is constant at a rational with finite
/// continued fraction `cf`: the series of both expansions of the rational.
pub fn q_preimage_interval(cf: &CfWord) -> (f64, f64) {
    let a = series(cf.terms().iter());
    let alt = cf.alternative();
    let b = if alt.terms().first().is_some_and(|t| t.is_zero()) { a } else { series(alt.terms().iter()) };
    (a.min(b), a.max(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::cf_decode;
    use crate::fibrep::{rho2, t_shift};

    fn nat(v: u64) -> Natural {
        v.into()
    }

    fn r(p: u64, q: u64) -> ExactRational {
        ratio(&nat(p), &nat(q))
    }

    #[test]
    fn examples() {
        assert_eq!(q(1u32, 6).unwrap(), r(1, 2));
        assert_eq!(q(3u32, 6).unwrap(), r(2, 3));
        for n in 3..40u64 {
            // R_{F_n} = ⌊n/2⌋
            assert_eq!(q(0u32, n).unwrap(), r(1, n / 2), "n = {n}");
        }
        assert!(q(5u32, 6).is_err());
        assert!(q(0u32, 1).is_err());
    }

    #[test]
    fn mediant_lemma() {
        let table = RTable::new(usize::try_from(fib(24)).unwrap());
        let raw = |k: usize, n: u64| {
            let f = usize::try_from(fib(n)).unwrap();
            RawFraction { num: table.get(k).clone(), den: table.get(f + k).clone() }
        };
        for n in 3..=20u64 {
            let top = u64::try_from(fib(n - 1)).unwrap();
            for k in 0..top {
                let t = usize::try_from(t_shift(&nat(k))).unwrap();
                assert_eq!(raw(t, n + 1), raw(k as usize, n), "T, k = {k}, n = {n}");
                if k >= 1 {
                    let r2 = usize::try_from(rho2(&nat(k))).unwrap();
                    let m = mediant(&raw(k as usize, n), &raw(k as usize - 1, n));
                    assert_eq!(raw(r2, n + 2), m, "ρ₂, k = {k}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn fibonacci_offset_lemma_and_row_symmetry() {
        let table = RTable::new(usize::try_from(fib(23)).unwrap());
        let f = |n: u64| usize::try_from(fib(n)).unwrap();
        for n in 2..=20u64 {
            for j in 0..f(n - 1) {
                assert_eq!(table.get(f(n + 2) + j), &(table.get(f(n) + j) + table.get(j)), "n = {n}, j = {j}");
            }
        }
        // Rows read symmetrically once R is indexed from 1, i.e. S_n = R_{n−1}.
        for m in 2..=20u64 {
            for k in 1..f(m - 1) {
                assert_eq!(table.get(f(m) + k - 1), table.get(f(m + 1) - k - 1), "m = {m}, k = {k}");
            }
        }
        assert_ne!(table.get(f(5) + 1), table.get(f(6) - 1));
    }

    #[test]
    fn sample_matches_evaluator() {
        let samples = sample_q(10).unwrap();
        assert_eq!(samples.len(), 34);
        let mut e = QEvaluator::new();
        for (k, (x, y)) in samples.iter().enumerate() {
            assert_eq!(*x, r(k as u64, 55));
            assert_eq!(*y, e.q(&nat(k as u64), 10).unwrap());
        }
        assert!(sample_q(2).is_err());
    }

    #[test]
    fn inverse_series_closed_forms() {
        let p = phi();
        let one = CfWord::from_u64s(&[1]).unwrap();
        assert!((q_inverse_series(&one, 10).unwrap() - 1.0 / p).abs() < 1e-12);
        let two = CfWord::from_u64s(&[2]).unwrap();
        assert!((q_inverse_series(&two, 10).unwrap() - p.powi(-3)).abs() < 1e-12);
        let ones = CfWord::from_u64s(&[1; 40]).unwrap();
        assert!((q_inverse_series(&ones, 40).unwrap() - 1.0 / 5f64.sqrt()).abs() < 1e-9);
        assert!((q_inverse_series_periodic(&one, 60).unwrap() - 1.0 / 5f64.sqrt()).abs() < 1e-12);
        assert!(q_inverse_series(&one, 0).is_err());
        let mixed = CfWord::from_u64s(&[3, 1, 4, 1, 5]).unwrap();
        let v = q_inverse_series(&mixed, 100).unwrap();
        assert!(v > 0.0 && v <= 1.0 / p);
    }

    #[test]
    fn brackets_narrow_by_depth_30() {
        let mut e = QEvaluator::new();
        for (k, m) in [(1u64, 5u64), (2, 6), (3, 7), (4, 9), (7, 12)] {
            let x = ratio(&nat(k), &fib(m));
            let (lo, hi) = e.bracket(&x, 30).unwrap();
            let width = (hi - lo).to_f64().unwrap();
            assert!(width < 1e-4, "x = {k}/F_{m}: width {width}");
        }
        assert!(e.bracket(&r(2, 3), 20).is_err());
        assert!(e.bracket(&r(1, 2), 20).is_ok());
        assert!(e.bracket(&r(0, 1), 20).is_ok());
    }

    // Q is flat on each interval whose endpoints are the two series values of a
    // rational; probing at its interior is the one-sided limit at either end.
    #[test]
    fn series_inverts_q_on_flat_pieces() {
        let mut e = QEvaluator::new();
        for terms in [&[2u64][..], &[3], &[2, 2], &[1, 2], &[3, 1, 2], &[2, 3], &[4, 1]] {
            let cf = CfWord::from_u64s(terms).unwrap();
            let (a, b) = q_preimage_interval(&cf);
            assert!(a < b);
            let target = cf_decode(&cf).to_f64().unwrap();
            let got = e.approx((a + b) / 2.0, 30).unwrap();
            assert!((got - target).abs() < 1e-3, "{cf}: {got} vs {target}");
            let left = e.approx(a, 30).unwrap();
            assert!((left - target).abs() < 1e-2, "{cf}: {left} vs {target}");
        }
    }
}
