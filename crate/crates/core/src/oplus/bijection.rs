use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::ominus;
use super::sequence::b_descend;
use crate::error::{Error, Result};
use crate::exact::{isqrt_exact, Natural};
use crate::stern::{Branch, PairPath};

/// `(b_n, b_{n+1})`; always has `4·left·right + 1` a perfect square.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BPair {
    pub left: Natural,
    pub right: Natural,
}

impl BPair {
    pub fn new(left: impl Into<Natural>, right: impl Into<Natural>) -> Self {
        BPair { left: left.into(), right: right.into() }
    }

    pub fn is_valid(&self) -> bool {
        isqrt_exact(&(&self.left * &self.right * 4u32 + 1u32)).1
    }

    fn check(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::NonSquareRadicand((&self.left * &self.right * 4u32 + 1u32).to_string()))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MStep {
    Next(BPair),
    Stop,
}

/// One step of the slow Euclidean analogue: subtract with `⊖` from the larger side.
pub fn m_oplus(p: &BPair) -> Result<MStep> {
    p.check()?;
    let natural = |v: num_bigint::BigInt| {
        v.to_biguint()
            .ok_or_else(|| Error::Integrity(format!("⊖ went negative on ({}, {})", p.left, p.right)))
    };
    Ok(match p.left.cmp(&p.right) {
        std::cmp::Ordering::Less => {
            MStep::Next(BPair { left: p.left.clone(), right: natural(ominus(&p.left, &p.right)?)? })
        }
        std::cmp::Ordering::Greater => {
            MStep::Next(BPair { left: natural(ominus(&p.left, &p.right)?)?, right: p.right.clone() })
        }
        std::cmp::Ordering::Equal => MStep::Stop,
    })
}

/// `(b_n, b_{n+1})` for `n >= 1`.
pub fn b_pair(n: impl Into<Natural>) -> Result<BPair> {
    let (left, right) = b_descend(&n.into())?;
    Ok(BPair { left, right })
}

/// Runs `M_⊕` down to `(0, 0)`, recording whether each pair was `B_{2n}` or `B_{2n+1}`.
///
/// `left < right` can only be the even child `(b_n, b_n ⊕ b_{n+1})`; the tail
/// `(0, b) ↦ (0, b − 1)` falls into that case as well.
pub fn b_pair_path(a: &Natural, b: &Natural) -> Result<PairPath> {
    let mut cur = BPair { left: a.clone(), right: b.clone() };
    cur.check()?;
    let mut path = PairPath::default();
    loop {
        let branch = if cur.left < cur.right { Branch::Even } else { Branch::Odd };
        match m_oplus(&cur)? {
            MStep::Next(next) => {
                path.push(branch, 1);
                cur = next;
            }
            MStep::Stop => break,
        }
    }
    if !(cur.left.is_zero() && cur.right.is_zero()) {
        return Err(Error::Integrity(format!("M_⊕ stopped at ({}, {})", cur.left, cur.right)));
    }
    Ok(path)
}

/// The unique `n >= 1` with `(b_n, b_{n+1}) = (a, b)`.
pub fn b_pair_index(a: impl Into<Natural>, b: impl Into<Natural>) -> Result<Natural> {
    Ok(b_pair_path(&a.into(), &b.into())?.index_from(&BigUint::one()))
}
