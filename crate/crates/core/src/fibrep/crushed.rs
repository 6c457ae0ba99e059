use num_bigint::BigUint;
use num_traits::Zero;

use super::count::RTable;
use crate::error::{domain, Result};
use crate::exact::{fib, Natural};

/// Rows of `R` cut at Fibonacci points and left-aligned.
///
/// Row `r` (from 1) holds `R_{F_{r+2}−1} ..= R_{F_{r+3}−2}`, which has `F_{r+1}` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RCrushedArray {
    rows: Vec<Vec<Natural>>,
}

impl RCrushedArray {
    pub fn rows(&self) -> &[Vec<Natural>] {
        &self.rows
    }

    /// Row `r`, counted from 1.
    pub fn row(&self, r: usize) -> Option<&[Natural]> {
        r.checked_sub(1).and_then(|i| self.rows.get(i)).map(Vec::as_slice)
    }

    /// `(row, value)` for every row long enough to have column `j` (from 0).
    pub fn column(&self, j: usize) -> Vec<(usize, &Natural)> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, row)| row.get(j).map(|v| (i + 1, v)))
            .collect()
    }

    /// Common difference of column `j` across two rows: `0` for the first column, else `R_{j−1}`.
    pub fn column_step(&self, table: &RTable, j: usize) -> Natural {
        if j == 0 {
            BigUint::zero()
        } else {
            table.get(j - 1).clone()
        }
    }
}

pub const MAX_CRUSHED_ROWS: usize = 25;

pub fn crushed_array_r(rows: usize) -> Result<RCrushedArray> {
    if rows > MAX_CRUSHED_ROWS {
        return Err(domain(format!("at most {MAX_CRUSHED_ROWS} rows, asked for {rows}")));
    }
    let f = |n: usize| usize::try_from(fib(n as u64)).expect("small");
    let table = RTable::new(f(rows + 3));
    Ok(RCrushedArray {
        rows: (1..=rows).map(|r| table.as_slice()[f(r + 2) - 1..=f(r + 3) - 2].to_vec()).collect(),
    })
}
