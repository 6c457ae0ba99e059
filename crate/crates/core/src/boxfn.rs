//! Conway's box function `f(k/2^n) = a_k / a_{2^n+k}` and its inverse,
//! Minkowski's question-mark function, both exact on their rational domains.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::exact::{cf_encode, ratio, CfWord, DyadicRational, ExactRational};
use crate::stern::{stern, SternTable};

/// Largest sampling depth accepted by [`sample_singular`].
pub const MAX_SAMPLE_DEPTH: u32 = 20;

/// `f(d)` for a dyadic `d` in `[0, 1]`.
pub fn conway_f(d: &DyadicRational) -> Result<ExactRational> {
    if !d.in_unit_interval() {
        return Err(domain(format!("{d} is outside [0, 1]")));
    }
    let k = d.numerator().clone();
    let denom_index = (BigUint::one() << d.exponent()) + &k;
    Ok(ratio(&stern(k), &stern(denom_index)))
}

/// `f(k / 2^n)` without reducing first; agrees with [`conway_f`] on every form.
pub fn conway_f_raw(k: u64, n: u32) -> Result<ExactRational> {
    if k > 1u64 << n {
        return Err(domain(format!("{k}/2^{n} is outside [0, 1]")));
    }
    Ok(ratio(&stern(k), &stern((1u64 << n) + k)))
}

/// `?(r)` for a rational `r` in `[0, 1]`; always a dyadic rational.
pub fn question_mark(r: &ExactRational) -> Result<DyadicRational> {
    if r.is_negative() || r > &BigRational::one() {
        return Err(domain(format!("{r} is outside [0, 1]")));
    }
    if r.is_zero() {
        return Ok(DyadicRational::zero());
    }
    question_mark_of_cf(&cf_encode(r)?)
}

/// `2 Σ (−1)^{i+1} 2^{−(a_1 + ... + a_i)}` over the given partial quotients.
pub fn question_mark_of_cf(cf: &CfWord) -> Result<DyadicRational> {
    let mut partial = Vec::with_capacity(cf.len());
    let mut s = 0u64;
    for t in cf.terms() {
        let t = t
            .to_u64()
            .ok_or_else(|| Error::RangeTooLarge(format!("partial quotient {t}")))?;
        s = s
            .checked_add(t)
            .ok_or_else(|| Error::RangeTooLarge("sum of partial quotients".into()))?;
        partial.push(s);
    }
    let top = *partial.last().expect("nonempty");
    let mut num = BigInt::zero();
    for (i, &si) in partial.iter().enumerate() {
        let term = BigInt::one() << (1 + top - si);
        if i % 2 == 0 {
            num += term;
        } else {
            num -= term;
        }
    }
    let num = num
        .to_biguint()
        .ok_or_else(|| Error::Integrity("negative question-mark value".into()))?;
    Ok(DyadicRational::new(num, top))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularFn {
    Box,
    QuestionMark,
}

/// Samples on the dyadic grid `k / 2^depth`.
///
/// For `Box` the abscissae are the grid points; for `QuestionMark` they are
/// their images under `f`, so both tables have `2^depth + 1` rows, sorted by x.
pub fn sample_singular(func: SingularFn, depth: u32) -> Result<Vec<(ExactRational, ExactRational)>> {
    if depth > MAX_SAMPLE_DEPTH {
        return Err(domain(format!("depth {depth} exceeds {MAX_SAMPLE_DEPTH}")));
    }
    let size = 1usize << depth;
    let table = SternTable::new(2 * size);
    let mut out = Vec::with_capacity(size + 1);
    for k in 0..=size {
        let x = ratio(&BigUint::from(k), &BigUint::from(size));
        let y = ratio(table.get(k), table.get(size + k));
        out.push(match func {
            SingularFn::Box => (x, y),
            SingularFn::QuestionMark => {
                let image = question_mark(&y)?.to_rational();
                (y, image)
            }
        });
    }
    Ok(out)
}
