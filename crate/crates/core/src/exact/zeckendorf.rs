use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use super::{fibs_through, Natural};
use crate::error::{domain, Error};

/// A word over `{0, 1}` read as a Fibonacci representation.
///
/// Bits are stored least-significant first: `bits[j]` weighs `F_{j+2}`.
/// Rendering (`Display`) reverses this into the usual most-significant-first
/// order, so `[0100] = [0011] = 3`. Words need not be canonical; the
/// Zeckendorf codec only ever produces canonical ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZeckendorfWord {
    bits: Vec<bool>,
}

impl ZeckendorfWord {
    pub fn from_lsb_bits(bits: Vec<bool>) -> Self {
        ZeckendorfWord { bits }
    }

    /// Parses `i_1 i_2 ... i_k` with `i_1` the most significant digit.
    pub fn from_msb_bits(bits: &[bool]) -> Self {
        ZeckendorfWord { bits: bits.iter().rev().copied().collect() }
    }

    pub fn lsb_bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn msb_bits(&self) -> Vec<bool> {
        self.bits.iter().rev().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// True when no two adjacent digits are both one.
    pub fn is_canonical(&self) -> bool {
        !self.bits.windows(2).any(|w| w[0] && w[1])
    }

    pub fn popcount(&self) -> u64 {
        self.bits.iter().filter(|&&b| b).count() as u64
    }

    /// `Σ bits_j F_{j+2}`.
    pub fn value(&self) -> Natural {
        let mut total = BigUint::zero();
        let (mut f, mut g) = (BigUint::from(1u32), BigUint::from(2u32));
        for &b in &self.bits {
            if b {
                total += &f;
            }
            let h = &f + &g;
            f = std::mem::replace(&mut g, h);
        }
        total
    }

    /// Appends a digit on the right, i.e. `ω ↦ ωd`: every existing index moves up by one.
    pub fn push_low(&self, digit: bool) -> Self {
        let mut bits = Vec::with_capacity(self.bits.len() + 1);
        bits.push(digit);
        bits.extend_from_slice(&self.bits);
        ZeckendorfWord { bits }
    }

    /// Left-pads with zeros to `len` digits. Never truncates.
    pub fn padded(&self, len: usize) -> Self {
        let mut bits = self.bits.clone();
        if bits.len() < len {
            bits.resize(len, false);
        }
        ZeckendorfWord { bits }
    }

    /// Removes leading (most-significant) zeros.
    pub fn trimmed(&self) -> Self {
        let keep = self.bits.iter().rposition(|&b| b).map_or(0, |i| i + 1);
        ZeckendorfWord { bits: self.bits[..keep].to_vec() }
    }
}

impl fmt::Display for ZeckendorfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in self.bits.iter().rev() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for ZeckendorfWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(domain(format!("invalid digit {other:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ZeckendorfWord::from_msb_bits(&bits))
    }
}

/// Greedy Zeckendorf representation; `0` encodes as the empty word.
pub fn zeck_encode(n: &Natural) -> ZeckendorfWord {
    let weights = fibs_through(n);
    let mut bits = vec![false; weights.len()];
    let mut rest = n.clone();
    for (j, w) in weights.iter().enumerate().rev() {
        if *w <= rest {
            rest -= w;
            bits[j] = true;
        }
    }
    debug_assert!(rest.is_zero());
    ZeckendorfWord { bits }.trimmed()
}

pub fn zeck_decode(word: &ZeckendorfWord) -> Natural {
    word.value()
}
