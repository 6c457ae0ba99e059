use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use super::descend;
use crate::error::{Error, Result};
use crate::exact::Natural;

/// `(a_n, a_{n+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SternPair {
    pub left: Natural,
    pub right: Natural,
}

impl SternPair {
    pub fn new(left: impl Into<Natural>, right: impl Into<Natural>) -> Self {
        SternPair { left: left.into(), right: right.into() }
    }
}

/// Which child a pair is: index `2n` (left < right) or `2n + 1` (left > right).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Even,
    Odd,
}

/// Branch record of the subtractive process, stored as runs in the order
/// they were taken (from the pair up towards `(1, 1)`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairPath {
    runs: Vec<(Branch, u64)>,
}

impl PairPath {
    pub fn push(&mut self, branch: Branch, count: u64) {
        if count == 0 {
            return;
        }
        match self.runs.last_mut() {
            Some((b, c)) if *b == branch => *c += count,
            _ => self.runs.push((branch, count)),
        }
    }

    pub fn runs(&self) -> &[(Branch, u64)] {
        &self.runs
    }

    /// Total number of single steps.
    pub fn steps(&self) -> u64 {
        self.runs.iter().map(|r| r.1).sum()
    }

    /// Rebuilds the index by walking down from `root`.
    pub fn index_from(&self, root: &Natural) -> Natural {
        let mut n = root.clone();
        for &(branch, count) in self.runs.iter().rev() {
            let shift = usize::try_from(count).expect("path run fits in memory");
            n <<= shift;
            if branch == Branch::Odd {
                n += (BigUint::one() << shift) - 1u32;
            }
        }
        n
    }

    /// Replays the Stern branches from `(1, 1)`.
    pub fn replay(&self) -> SternPair {
        let (mut a, mut b) = (BigUint::one(), BigUint::one());
        for &(branch, count) in self.runs.iter().rev() {
            match branch {
                Branch::Even => b += &a * count,
                Branch::Odd => a += &b * count,
            }
        }
        SternPair { left: a, right: b }
    }
}

/// `(a_n, a_{n+1})`; `n = 0` gives `(0, 1)`.
pub fn stern_pair(n: impl Into<Natural>) -> SternPair {
    let (left, right) = descend(&n.into());
    SternPair { left, right }
}

/// The subtractive process on a coprime pair, recorded as a [`PairPath`].
pub fn stern_path(p: &Natural, q: &Natural) -> Result<PairPath> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::Domain(format!("({p}, {q}) has a zero entry")));
    }
    if !p.gcd(q).is_one() {
        return Err(Error::NotCoprime(p.to_string(), q.to_string()));
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut path = PairPath::default();
    while !(a.is_one() && b.is_one()) {
        // Coprime, so an exact multiple only happens against 1.
        let (branch, k) = if a < b {
            let k = if a.is_one() { &b - 1u32 } else { &b / &a };
            b -= &a * &k;
            (Branch::Even, k)
        } else {
            let k = if b.is_one() { &a - 1u32 } else { &a / &b };
            a -= &b * &k;
            (Branch::Odd, k)
        };
        let k = k
            .to_u64()
            .ok_or_else(|| Error::RangeTooLarge(format!("index of ({p}, {q})")))?;
        path.push(branch, k);
    }
    Ok(path)
}

/// The unique `n >= 1` with `(a_n, a_{n+1}) = (p, q)`.
pub fn stern_index(p: impl Into<Natural>, q: impl Into<Natural>) -> Result<Natural> {
    let path = stern_path(&p.into(), &q.into())?;
    Ok(path.index_from(&BigUint::one()))
}
