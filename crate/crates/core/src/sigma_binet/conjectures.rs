use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Signed;
use serde::Serialize;

use super::{fib_usize, CSigmaTable};
use crate::error::{domain, Result};
use crate::fibrep::beatty::{floor_n_phi, floor_n_phi2};
use crate::fibrep::{rho, rho2};

pub const REPORT_SCHEMA_VERSION: u32 = 1;
pub const MAX_CONJECTURE_BOUND: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjectureId {
    /// `c_{ρ₂(n)+1} >= c_{⌊nφ²⌋} >= c_{⌊nφ⌋} >= c_{ρ(n)} >= c_n >= 0`.
    FiveInequalities,
    /// Each crushed-array row is bounded below by its first entry.
    RowMinimumAtLeft,
    /// `x_{n+2} = x_n + x_{n−1}` for `x_n = c_{F_n}`.
    FirstColumnPadovan,
    /// `x_{n+1} = x_n + x_{n−1} − x_{n−3}` down every column.
    ColumnDyingRabbit,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureOutcome {
    pub id: ConjectureId,
    pub statement: &'static str,
    /// Number of instances examined.
    pub checked: u64,
    /// Indices `n <= bound` at which the statement fails.
    pub violations: Vec<u64>,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub schema_version: u32,
    pub bound: u64,
    pub assumptions: Vec<&'static str>,
    pub conjectures: Vec<ConjectureOutcome>,
    pub wall_time_ms: f64,
}

impl ConjectureReport {
    pub fn outcome(&self, id: ConjectureId) -> Option<&ConjectureOutcome> {
        self.conjectures.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn timed(id: ConjectureId, statement: &'static str, run: impl FnOnce() -> (u64, Vec<u64>)) -> ConjectureOutcome {
    let start = Instant::now();
    let (checked, violations) = run();
    ConjectureOutcome { id, statement, checked, violations, wall_time_ms: start.elapsed().as_secs_f64() * 1e3 }
}

fn at(n: &BigUint) -> usize {
    usize::try_from(n).expect("index fits")
}

/// Searches `n <= bound` for counterexamples to four observed patterns of `c`.
/// Nothing is asserted; an empty violation list means none was found.
pub fn conjecture_report(bound: usize) -> Result<ConjectureReport> {
    if bound > MAX_CONJECTURE_BOUND {
        return Err(domain(format!("bound {bound} exceeds {MAX_CONJECTURE_BOUND}")));
    }
    let start = Instant::now();
    let reach = at(&rho2(&BigUint::from(bound))) + 2;
    let c = CSigmaTable::new(reach.max(fib_usize(4)))?;
    let mut conjectures = Vec::new();

    conjectures.push(timed(
        ConjectureId::FiveInequalities,
        "c(rho2(n)+1) >= c(floor(n phi^2)) >= c(floor(n phi)) >= c(rho(n)) >= c(n) >= 0",
        || {
            let mut bad = Vec::new();
            for n in 1..=bound {
                let m = BigUint::from(n);
                let chain = [
                    c.get(at(&rho2(&m)) + 1),
                    c.get(at(&floor_n_phi2(&m))),
                    c.get(at(&floor_n_phi(&m))),
                    c.get(at(&rho(&m))),
                    c.get(n),
                ];
                if chain.windows(2).any(|w| w[0] < w[1]) || chain[4].is_negative() {
                    bad.push(n as u64);
                }
            }
            (bound as u64, bad)
        },
    ));

    conjectures.push(timed(
        ConjectureId::RowMinimumAtLeft,
        "in every crushed-array row c(F_r) .. c(F_(r+1) - 1), no entry is below the first",
        || {
            let mut bad = Vec::new();
            let mut checked = 0;
            let mut r = 2;
            while fib_usize(r) <= bound {
                let first = c.get(fib_usize(r));
                for n in fib_usize(r)..fib_usize(r + 1).min(bound + 1) {
                    checked += 1;
                    if c.get(n) < first {
                        bad.push(n as u64);
                    }
                }
                r += 1;
            }
            (checked, bad)
        },
    ));

    conjectures.push(timed(
        ConjectureId::FirstColumnPadovan,
        "x(n+2) = x(n) + x(n-1) for x(n) = c(F_n); violations are reported at F_(n+2)",
        || {
            let mut bad = Vec::new();
            let mut checked = 0;
            let mut n = 3;
            while fib_usize(n + 2) <= bound {
                checked += 1;
                let x = |i: usize| c.get(fib_usize(i));
                if *x(n + 2) != x(n) + x(n - 1) {
                    bad.push(fib_usize(n + 2) as u64);
                }
                n += 1;
            }
            (checked, bad)
        },
    ));

    conjectures.push(timed(
        ConjectureId::ColumnDyingRabbit,
        "x(n+1) = x(n) + x(n-1) - x(n-3) for x(n) = c(F_n + k); violations are reported at F_(n+1) + k",
        || {
            let mut bad = Vec::new();
            let mut checked = 0;
            let mut n = 5;
            while fib_usize(n + 1) <= bound {
                let x = |i: usize, k: usize| c.get(fib_usize(i) + k);
                for k in 0..fib_usize(n - 4) {
                    let top = fib_usize(n + 1) + k;
                    if top > bound {
                        break;
                    }
                    checked += 1;
                    if *x(n + 1, k) != x(n, k) + x(n - 1, k) - x(n - 3, k) {
                        bad.push(top as u64);
                    }
                }
                n += 1;
            }
            (checked, bad)
        },
    ));

    Ok(ConjectureReport {
        schema_version: REPORT_SCHEMA_VERSION,
        bound: bound as u64,
        assumptions: vec![
            "sigma(n) and sigma2(n) in the inequality chain are read as the Fibonacci shifts rho(n) = floor(n phi + 1/phi) and rho2(n) = rho(rho(n))",
            "crushed-array row r holds c(F_(r+1)) .. c(F_(r+2) - 1)",
        ],
        conjectures,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
