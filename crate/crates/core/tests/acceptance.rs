//! One PASS/FAIL line per acceptance criterion, each with its time budget.
//!
//! Exits nonzero when any non-informational criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use diatomic::sigma_binet::conjecture_report;
use diatomic::verify::{run_check, CheckOutcome};

struct Criterion {
    number: u32,
    title: &'static str,
    budget: Duration,
    /// Checks run with these bounds; all must pass.
    checks: &'static [(&'static str, u64)],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        title: "printed prefixes and crushed-array rows",
        budget: Duration::from_secs(1),
        checks: &[("printed-prefixes", 0)],
    },
    Criterion {
        number: 2,
        title: "b recurrence equals closed form, k <= 2^16",
        budget: Duration::from_secs(10),
        checks: &[("b-closed-form", 1 << 16)],
    },
    Criterion {
        number: 3,
        title: "Stern and oplus bijections round-trip",
        budget: Duration::from_secs(30),
        checks: &[("stern-pairs", 200), ("stern-indices", 1 << 14), ("oplus-pairs", 300), ("oplus-indices", 1 << 14)],
    },
    Criterion {
        number: 4,
        title: "box function, question mark and g on dyadics",
        budget: Duration::from_secs(30),
        checks: &[("box-inverse", 12), ("g-box-formula", 12), ("box-reciprocal", 18)],
    },
    Criterion {
        number: 5,
        title: "R oracles, offset lemma, row symmetry, mediants, crushed columns",
        budget: Duration::from_secs(60),
        checks: &[
            ("r-oracle", 100_000),
            ("r-fibonacci-offset", 20),
            ("r-row-symmetry", 20),
            ("q-mediant", 20),
            ("r-crushed-columns", 22),
        ],
    },
    Criterion {
        number: 6,
        title: "Zeckendorf shifts, complementary partition, triple shift, alpha/beta",
        budget: Duration::from_secs(10),
        checks: &[("beatty-shift", 10_000), ("beatty-partition", 10_000), ("triple-shift", 10_000), ("alpha-beta", 5000)],
    },
    Criterion {
        number: 7,
        title: "sigma sums: Stern, integrality of c, Fibonacci recurrence and offsets",
        budget: Duration::from_secs(60),
        checks: &[
            ("binet-stern", 1 << 12),
            ("c-integral", 5000),
            ("c-fibonacci-recurrence", 18),
            ("c-fibonacci-offsets", 18),
        ],
    },
    Criterion {
        number: 8,
        title: "growth constant at J(30) and sweep maximum to 2^20",
        budget: Duration::from_secs(60),
        checks: &[("coons-tyler", 20)],
    },
    Criterion {
        number: 9,
        title: "exponential sum equals Mertens sum at 100, 500, 2000",
        budget: Duration::from_secs(60),
        checks: &[("mertens", 100), ("mertens", 500), ("mertens", 2000)],
    },
    Criterion {
        number: 10,
        title: "inverse series closed forms and Q consistency",
        budget: Duration::from_secs(10),
        checks: &[("q-inverse-series", 30)],
    },
];

fn describe(o: &CheckOutcome) -> Vec<String> {
    let verdict = if o.passed() { "ok" } else { "FAILED" };
    let mut lines = vec![format!("    {verdict} {} (bound {}, {} cases, {:.1} ms)", o.id, o.bound, o.cases, o.wall_time_ms)];
    if let Some(f) = &o.failure {
        lines.push(format!("      first failure {f}"));
    }
    lines.extend(o.notes.iter().map(|n| format!("      note: {n}")));
    lines
}

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let mut detail = Vec::new();
        let mut ok = true;
        for &(id, bound) in c.checks {
            match run_check(id, Some(bound), 0) {
                Ok(o) => {
                    ok &= o.passed();
                    detail.extend(describe(&o));
                }
                Err(e) => {
                    ok = false;
                    detail.push(format!("    ERROR {id}: {e}"));
                }
            }
        }
        let elapsed = start.elapsed();
        let in_budget = elapsed <= c.budget;
        if !in_budget {
            detail.push(format!("    over budget: {:.2} s > {} s", elapsed.as_secs_f64(), c.budget.as_secs()));
        }
        let verdict = if ok && in_budget { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {:>2}: {} [{:.2} s]", c.number, c.title, elapsed.as_secs_f64());
        for line in detail {
            println!("{line}");
        }
        if verdict == "FAIL" {
            failed.push(c.number);
        }
    }

    let start = Instant::now();
    match conjecture_report(2000) {
        Ok(report) => {
            let elapsed = start.elapsed();
            let violations: usize = report.conjectures.iter().map(|o| o.violations.len()).sum();
            let verdict = if violations == 0 && elapsed <= Duration::from_secs(120) { "PASS" } else { "FAIL" };
            println!(
                "{verdict} criterion 11: conjecture report at bound 2000, informational [{:.2} s]",
                elapsed.as_secs_f64()
            );
            for o in &report.conjectures {
                println!("    {:?}: {} checked, {} violations {:?}", o.id, o.checked, o.violations.len(), o.violations);
            }
        }
        Err(e) => println!("FAIL criterion 11: conjecture report did not complete: {e}"),
    }

    if failed.is_empty() {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: criteria {failed:?} fail");
        ExitCode::FAILURE
    }
}
