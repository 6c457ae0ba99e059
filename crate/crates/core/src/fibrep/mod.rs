//! Fibonacci representations: the exact shift `ρ`, the counting sequence
//! `R_n`, the singular function `Q` built from it, crushed arrays, and the
//! representation graph.

pub mod beatty;
mod count;
mod crushed;
mod graph;
mod singular;

pub use count::{classify, r_count, r_count_recursive, r_count_recursive_table, RTable, RecursiveR, ShiftPreimage};
pub use crushed::{crushed_array_r, RCrushedArray};
pub use graph::{graph_g, ExactPoint, GraphG, Vertex, VertexKey, MAX_GRAPH_DEPTH};
pub use singular::{
    mediant, q, q_inverse_series, q_inverse_series_periodic, q_preimage_interval, sample_q, QEvaluator, RawFraction,
};

use crate::exact::{zeck_encode, Natural};

/// The Fibonacci shift `ρ(n) = ⌊nφ + 1/φ⌋`, computed by moving every
/// Zeckendorf index up by one.
pub fn rho(n: &Natural) -> Natural {
    zeck_encode(n).push_low(false).value()
}

/// `ρ(ρ(n)) = ρ(n) + n`.
pub fn rho2(n: &Natural) -> Natural {
    rho(n) + n
}

/// `T(n) = ⌊nφ + 2/φ⌋ = ρ(n + 1) − 1`.
pub fn t_shift(n: &Natural) -> Natural {
    rho(&(n + 1u32)) - 1u32
}

#[cfg(test)]
mod tests {
    use super::beatty::*;
    use super::*;
    use num_bigint::BigUint;

    fn nat(v: u64) -> Natural {
        v.into()
    }

    #[test]
    fn shift_examples() {
        assert_eq!(rho(&nat(0)), nat(0));
        assert_eq!(rho(&nat(4)), nat(7));
        assert_eq!(rho(&nat(3)), nat(5));
        assert_eq!(rho2(&nat(1)), nat(3));
        assert_eq!(rho2(&nat(5)), nat(13));
        assert_eq!(rho2(&nat(0)), nat(0));
        assert_eq!(t_shift(&nat(0)), nat(1));
        assert_eq!(t_shift(&nat(2)), nat(4));
        assert_eq!(t_shift(&nat(4)), nat(7));
    }

    #[test]
    fn shift_agrees_with_certified_floors() {
        for n in 0..=10_000u64 {
            let n = nat(n);
            assert_eq!(rho(&n), beatty_rho(&n), "n = {n}");
            assert_eq!(rho2(&n), beatty_rho2(&n), "n = {n}");
            assert_eq!(rho(&rho(&n)), rho2(&n));
            assert_eq!(t_shift(&n), beatty_t(&n), "n = {n}");
        }
    }

    #[test]
    fn complementary_partition() {
        let limit = 10_000usize;
        let mut hits = vec![0u8; limit + 1];
        for n in 1..=limit as u64 {
            let v = rho2(&nat(n));
            if v <= BigUint::from(limit) {
                hits[usize::try_from(v).unwrap()] += 1;
            }
        }
        for n in 0..=limit as u64 {
            let v = t_shift(&nat(n));
            if v <= BigUint::from(limit) {
                hits[usize::try_from(v).unwrap()] += 1;
            }
        }
        assert!(hits[1..].iter().all(|&h| h == 1));
    }

    #[test]
    fn triple_shift_identity() {
        for n in 0..=10_000u64 {
            let n = nat(n);
            let lhs = rho(&rho(&(rho(&n) + 1u32)));
            let rhs = rho(&(rho(&rho(&n)) + 1u32)) + 1u32;
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }
}
