//! Named property sweeps over the exact machinery.
//!
//! Each check walks a finite range, stops at the first failing instance in
//! index order, and reports how many instances it examined. Sweeps run on the
//! current rayon pool, so the outcome does not depend on the number of workers.

use std::ops::RangeInclusive;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::boxfn::{conway_f, question_mark};
use crate::error::{Error, Result};
use crate::exact::{fib, ratio, CfWord, DyadicRational, ExactRational, Natural};
use crate::fibrep::beatty::{alpha, beatty_rho, beta, complementary_alpha, complementary_beta};
use crate::fibrep::{
    crushed_array_r, mediant, q_inverse_series, q_inverse_series_periodic, q_preimage_interval,
    r_count_recursive_table, rho, rho2, t_shift, QEvaluator, RTable, RawFraction,
};
use crate::oplus::{b_closed, b_pair, b_pair_index, BPair, BTable};
use crate::sigma_binet::{crushed_array_c, crushed_array_sf, s_f_table, CSigmaTable};
use crate::stern::{
    binet_sigma_stern, coons_tyler_max, coons_tyler_ratio, jacobsthal, stern, stern_exponential_sum, stern_index,
    stern_pair, SternPair, SternTable,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub bound: u64,
    /// Instances examined.
    pub cases: u64,
    /// The first failing instance, if any.
    pub failure: Option<String>,
    /// Extra measurements worth printing next to the verdict.
    pub notes: Vec<String>,
    pub wall_time_ms: f64,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

pub struct Check {
    pub id: &'static str,
    pub description: &'static str,
    pub default_bound: u64,
    /// Largest bound accepted.
    pub max_bound: u64,
    run: fn(u64) -> Result<Tally>,
}

impl Check {
    pub fn run(&self, bound: u64) -> Result<CheckOutcome> {
        if bound > self.max_bound {
            return Err(Error::RangeTooLarge(format!("{}: bound {bound} exceeds {}", self.id, self.max_bound)));
        }
        let start = Instant::now();
        let tally = (self.run)(bound)?;
        Ok(CheckOutcome {
            id: self.id,
            bound,
            cases: tally.cases,
            failure: tally.failure,
            notes: tally.notes,
            wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        })
    }
}

#[derive(Debug, Default)]
struct Tally {
    cases: u64,
    failure: Option<String>,
    notes: Vec<String>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
        self.notes.extend(other.notes);
        self
    }

    fn note(mut self, note: String) -> Tally {
        self.notes.push(note);
        self
    }
}

/// Runs `test` over the range in parallel and keeps the lowest failing index.
fn sweep<F>(range: RangeInclusive<u64>, test: F) -> Tally
where
    F: Fn(u64) -> Option<String> + Sync + Send,
{
    let cases = if range.is_empty() { 0 } else { range.end() - range.start() + 1 };
    let failure = range.into_par_iter().find_map_first(|i| test(i).map(|m| format!("at {i}: {m}")));
    Tally { cases, failure, notes: Vec::new() }
}

fn single(ok: bool, what: impl FnOnce() -> String) -> Tally {
    Tally { cases: 1, failure: (!ok).then(what), notes: Vec::new() }
}

fn nat(v: u64) -> Natural {
    v.into()
}

fn idx(n: &Natural) -> usize {
    usize::try_from(n).expect("index fits in memory")
}

fn fu(n: u64) -> usize {
    idx(&fib(n))
}

fn compare<T: PartialEq + std::fmt::Debug>(name: &str, got: &[T], want: &[T]) -> Tally {
    single(got == want, || format!("{name}: got {got:?}, expected {want:?}"))
}

fn printed_prefixes(_: u64) -> Result<Tally> {
    let as_u64 = |v: &[Natural]| v.iter().map(|x| u64::try_from(x).unwrap_or(u64::MAX)).collect::<Vec<_>>();
    let as_i64 = |v: &[BigInt]| v.iter().map(|x| x.to_i64().unwrap_or(i64::MAX)).collect::<Vec<_>>();

    let stern_got: Vec<Natural> = (1..=17u64).map(stern).collect();
    let mut t = compare("stern(1..17)", &as_u64(&stern_got), &[1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1, 5]);

    let bt = BTable::new(27)?;
    let b_got: Vec<Natural> = (1..=27).map(|n| bt.get(n).clone()).collect();
    let b_want = [0, 0, 1, 0, 2, 1, 2, 0, 3, 2, 6, 1, 6, 2, 3, 0, 4, 3, 10, 2, 15, 6, 12, 1, 12, 6, 15];
    t = t.merge(compare("b(1..27)", &as_u64(&b_got), &b_want));

    let sf: Vec<u64> = s_f_table(20).iter().map(|&d| u64::from(d)).collect();
    t = t.merge(compare("s_F(0..20)", &sf, &[0, 1, 1, 1, 2, 1, 2, 2, 1, 2, 2, 2, 3, 1, 2, 2, 2, 3, 2, 3, 3]));

    let c = CSigmaTable::exact(23)?;
    let c_want = [1, 1, 2, 3, 2, 4, 3, 3, 6, 4, 6, 6, 4, 8, 6, 7, 10, 6, 9, 7, 5, 11, 8];
    t = t.merge(compare("c(1..23)", &as_i64(&c.as_slice()[1..]), &c_want));

    let r2: Vec<Natural> = (0..10).map(|n| rho2(&nat(n))).collect();
    t = t.merge(compare("rho2(0..9)", &as_u64(&r2), &[0, 3, 5, 8, 11, 13, 16, 18, 21, 24]));
    let tt: Vec<Natural> = (0..10).map(|n| t_shift(&nat(n))).collect();
    t = t.merge(compare("T(0..9)", &as_u64(&tt), &[1, 2, 4, 6, 7, 9, 10, 12, 14, 15]));

    let rr = crushed_array_r(6)?;
    let r_rows: [&[u64]; 6] = [
        &[1],
        &[1, 2],
        &[1, 2, 2],
        &[1, 3, 2, 2, 3],
        &[1, 3, 3, 2, 4, 2, 3, 3],
        &[1, 4, 3, 3, 5, 2, 4, 4, 2, 5, 3, 3, 4],
    ];
    for (i, want) in r_rows.iter().enumerate() {
        t = t.merge(compare(&format!("R crushed row {}", i + 1), &as_u64(&rr.rows()[i]), want));
    }

    let sf_rows = crushed_array_sf(5)?;
    let sf_want: [&[u8]; 5] = [&[1], &[1], &[1, 2], &[1, 2, 2], &[1, 2, 2, 2, 3]];
    for (i, want) in sf_want.iter().enumerate() {
        t = t.merge(compare(&format!("s_F crushed row {}", i + 1), &sf_rows[i], want));
    }

    let cr = crushed_array_c(8)?;
    let c_rows: [&[i64]; 8] = [
        &[1],
        &[1],
        &[2, 3],
        &[2, 4, 3],
        &[3, 6, 4, 6, 6],
        &[4, 8, 6, 7, 10, 6, 9, 7],
        &[5, 11, 8, 11, 13, 8, 14, 10, 9, 15, 9, 13, 11],
        &[7, 15, 11, 15, 19, 12, 19, 14, 11, 21, 14, 19, 19],
    ];
    for (i, want) in c_rows.iter().enumerate() {
        // The last printed row is cut off after its thirteenth entry.
        let got = as_i64(&cr[i]);
        t = t.merge(compare(&format!("c crushed row {}", i + 1), &got[..want.len().min(got.len())], want));
    }
    Ok(t)
}

fn b_closed_form(bound: u64) -> Result<Tally> {
    let table = BTable::new(bound as usize)?;
    Ok(sweep(1..=bound, |k| {
        let closed = b_closed(k).ok()?;
        (closed != *table.get(k as usize)).then(|| format!("recurrence {} but closed form {closed}", table.get(k as usize)))
    }))
}

fn stern_pairs(bound: u64) -> Result<Tally> {
    let pairs: Vec<(u64, u64)> =
        (1..bound).flat_map(|p| (1..=bound - p).map(move |q| (p, q))).filter(|&(p, q)| p.gcd(&q) == 1).collect();
    let failure = pairs.par_iter().find_map_first(|&(p, q)| match stern_index(p, q) {
        Ok(n) if stern_pair(n.clone()) == SternPair::new(p, q) => None,
        Ok(n) => Some(format!("({p}, {q}) maps to {n}, which does not map back")),
        Err(e) => Some(format!("({p}, {q}): {e}")),
    });
    Ok(Tally { cases: pairs.len() as u64, failure, notes: Vec::new() })
}

fn stern_indices(bound: u64) -> Result<Tally> {
    Ok(sweep(1..=bound, |n| {
        let p = stern_pair(n);
        match stern_index(p.left.clone(), p.right.clone()) {
            Ok(m) if m == nat(n) => None,
            Ok(m) => Some(format!("pair ({}, {}) maps back to {m}", p.left, p.right)),
            Err(e) => Some(e.to_string()),
        }
    }))
}

fn oplus_pairs(bound: u64) -> Result<Tally> {
    let pairs: Vec<(u64, u64)> = (0..=bound)
        .flat_map(|a| (0..=bound).map(move |b| (a, b)))
        .filter(|&(a, b)| BPair::new(a, b).is_valid())
        .collect();
    let failure = pairs.par_iter().find_map_first(|&(a, b)| match b_pair_index(a, b).and_then(b_pair) {
        Ok(p) if p == BPair::new(a, b) => None,
        Ok(p) => Some(format!("({a}, {b}) round-trips to ({}, {})", p.left, p.right)),
        Err(e) => Some(format!("({a}, {b}): {e}")),
    });
    Ok(Tally { cases: pairs.len() as u64, failure, notes: Vec::new() })
}

fn oplus_indices(bound: u64) -> Result<Tally> {
    Ok(sweep(1..=bound, |n| match b_pair(n).and_then(|p| b_pair_index(p.left, p.right)) {
        Ok(m) if m == nat(n) => None,
        Ok(m) => Some(format!("maps back to {m}")),
        Err(e) => Some(e.to_string()),
    }))
}

fn dyadics(exponent: u64) -> Vec<DyadicRational> {
    let size = 1u64 << exponent;
    (0..=size).map(|k| DyadicRational::new(k, exponent)).collect()
}

fn box_inverse(exponent: u64) -> Result<Tally> {
    let grid = dyadics(exponent);
    let failure = grid.par_iter().find_map_first(|d| match conway_f(d).and_then(|y| question_mark(&y)) {
        Ok(back) if back == *d => None,
        Ok(back) => Some(format!("?(f({d})) = {back}")),
        Err(e) => Some(format!("{d}: {e}")),
    });
    Ok(Tally { cases: grid.len() as u64, failure, notes: Vec::new() })
}

// g(x) = f(2^{j+1}x − 1)(1 − j f(2x)) for x in (2^{−j−1}, 2^{−j}).
fn g_box_formula(exponent: u64) -> Result<Tally> {
    let n = exponent as u32;
    let size = 1usize << n;
    let a = SternTable::new(4 * size);
    let bt = BTable::new(2 * size)?;
    let f = |k: usize| ratio(a.get(k), a.get(size + k));
    let one = ExactRational::one();
    let mut t = sweep(1..=(size as u64 - 1), |k| {
        let k = k as usize;
        if k.is_power_of_two() {
            return None;
        }
        let j = (n - 1 - k.ilog2()) as usize;
        let first = f((k << (j + 1)) - size);
        let rhs = if j == 0 { first } else { first * (&one - BigRational::from_integer(j.into()) * f(2 * k)) };
        let gx = ratio(bt.get(k), bt.get(size + k));
        (gx != rhs).then(|| format!("g = {gx}, formula gives {rhs}"))
    });
    t.cases -= u64::from(n.saturating_sub(1));
    Ok(t.note(format!("dyadic points k/2^{n} with k a power of two sit on interval ends and are skipped")))
}

fn box_reciprocal(bound: u64) -> Result<Tally> {
    Ok(sweep(0..=bound, |j| {
        let got = conway_f(&DyadicRational::new(1u32, j)).ok()?;
        let want = ratio(&nat(1), &nat(j + 1));
        (got != want).then(|| format!("f(2^-{j}) = {got}"))
    }))
}

fn r_oracle(bound: u64) -> Result<Tally> {
    let dp = RTable::new(bound as usize);
    let rec = r_count_recursive_table(bound as usize)?;
    Ok(sweep(0..=bound, |n| {
        let (a, b) = (dp.get(n as usize), &rec[n as usize]);
        (a != b).then(|| format!("subset count {a}, shift recursion {b}"))
    }))
}

fn r_fibonacci_offset(bound: u64) -> Result<Tally> {
    let t = RTable::new(fu(bound + 3));
    let mut tally = Tally::default();
    for n in 2..=bound {
        let sub = sweep(0..=(fu(n - 1) as u64).saturating_sub(1), |j| {
            let j = j as usize;
            let lhs = t.get(fu(n + 2) + j);
            let rhs = t.get(fu(n) + j) + t.get(j);
            (*lhs != rhs).then(|| format!("n = {n}: R = {lhs}, sum = {rhs}"))
        });
        tally = tally.merge(sub);
    }
    Ok(tally)
}

fn r_row_symmetry(bound: u64) -> Result<Tally> {
    let t = RTable::new(fu(bound + 2));
    let mut literal = Tally::default();
    let mut shifted = Tally::default();
    for m in 2..=bound {
        let top = (fu(m - 1) as u64).saturating_sub(1);
        literal = literal.merge(sweep(1..=top, |k| {
            let (a, b) = (t.get(fu(m) + k as usize), t.get(fu(m + 1) - k as usize));
            (a != b).then(|| format!("m = {m}: R(F_m + k) = {a}, R(F_(m+1) - k) = {b}"))
        }));
        shifted = shifted.merge(sweep(1..=top, |k| {
            let (a, b) = (t.get(fu(m) + k as usize - 1), t.get(fu(m + 1) - k as usize - 1));
            (a != b).then(|| format!("m = {m}"))
        }));
    }
    let note = match &shifted.failure {
        None => format!("with R indexed from 1 (R(F_m + k - 1) = R(F_(m+1) - k - 1)) all {} cases hold", shifted.cases),
        Some(f) => format!("the index-shifted form also fails {f}"),
    };
    Ok(literal.note(note))
}

fn q_mediant(bound: u64) -> Result<Tally> {
    let t = RTable::new(fu(bound + 4));
    let raw = |k: usize, n: u64| RawFraction { num: t.get(k).clone(), den: t.get(fu(n) + k).clone() };
    let mut tally = Tally::default();
    for n in 3..=bound {
        tally = tally.merge(sweep(0..=(fu(n - 1) as u64 - 1), |k| {
            let tk = idx(&t_shift(&nat(k)));
            if raw(tk, n + 1) != raw(k as usize, n) {
                return Some(format!("n = {n}: q(T(k), F_(n+1)) = {}, q(k, F_n) = {}", raw(tk, n + 1), raw(k as usize, n)));
            }
            if k >= 1 {
                let r2 = idx(&rho2(&nat(k)));
                let m = mediant(&raw(k as usize, n), &raw(k as usize - 1, n));
                if raw(r2, n + 2) != m {
                    return Some(format!("n = {n}: q(rho2(k), F_(n+2)) = {}, mediant {m}", raw(r2, n + 2)));
                }
            }
            None
        }));
    }
    Ok(tally)
}

fn r_crushed_columns(bound: u64) -> Result<Tally> {
    let a = crushed_array_r(bound as usize)?;
    let table = RTable::new(a.rows().last().map_or(0, Vec::len) + 1);
    let width = a.rows().last().map_or(0, Vec::len) as u64;
    Ok(sweep(0..=width.saturating_sub(1), |j| {
        let col: Vec<BigInt> = a.column(j as usize).into_iter().map(|(_, v)| BigInt::from(v.clone())).collect();
        let step = BigInt::from(a.column_step(&table, j as usize));
        if let Some(w) = col.windows(3).find(|w| w[2] != &w[0] + &step) {
            return Some(format!("column {j}: {} then {} with step {step}", w[0], w[2]));
        }
        col.windows(4)
            .find(|w| w[3] != &w[2] + &w[1] - &w[0])
            .map(|w| format!("column {j}: {w:?} breaks x(n+1) = x(n) + x(n-1) - x(n-2)"))
    }))
}

fn beatty_shift(bound: u64) -> Result<Tally> {
    Ok(sweep(0..=bound, |n| {
        let (z, b) = (rho(&nat(n)), beatty_rho(&nat(n)));
        (z != b).then(|| format!("Zeckendorf shift {z}, certified floor {b}"))
    }))
}

fn beatty_partition(bound: u64) -> Result<Tally> {
    let mut hits = vec![0u8; bound as usize + 1];
    for n in 1..=bound {
        let v = idx(&rho2(&nat(n)));
        if v > bound as usize {
            break;
        }
        hits[v] += 1;
    }
    for n in 0..=bound {
        let v = idx(&t_shift(&nat(n)));
        if v > bound as usize {
            break;
        }
        hits[v] += 1;
    }
    let bad = (1..=bound as usize).find(|&i| hits[i] != 1);
    Ok(Tally {
        cases: bound,
        failure: bad.map(|i| format!("{i} is hit {} times", hits[i])),
        notes: Vec::new(),
    })
}

fn triple_shift(bound: u64) -> Result<Tally> {
    Ok(sweep(0..=bound, |n| {
        let n = nat(n);
        let lhs = rho(&rho(&(rho(&n) + 1u32)));
        let rhs = rho(&(rho(&rho(&n)) + 1u32)) + 1u32;
        (lhs != rhs).then(|| format!("{lhs} != {rhs}"))
    }))
}

fn alpha_beta(bound: u64) -> Result<Tally> {
    let limit = idx(&beta(&nat(bound))).max(idx(&complementary_beta(&nat(bound)))) + 2;
    let t = RTable::new(limit);
    let check = |a: fn(&Natural) -> Natural, b: fn(&Natural) -> Natural, from: u64| {
        sweep(from..=bound, |n| {
            let (ai, bi) = (idx(&a(&nat(n))), idx(&b(&nat(n))));
            let n = n as usize;
            if t.get(ai) != t.get(n) {
                return Some(format!("R(alpha) = R({ai}) = {}, R(n) = {}", t.get(ai), t.get(n)));
            }
            let sum = t.get(n) + t.get(n + 1);
            (*t.get(bi) != sum).then(|| format!("R(beta) = R({bi}) = {}, R(n) + R(n+1) = {sum}", t.get(bi)))
        })
    };
    let literal = check(alpha, beta, 1);
    let corrected = check(complementary_alpha, complementary_beta, 0);
    let note = match &corrected.failure {
        None => format!(
            "with alpha(n) = floor(n phi + 2/phi) and beta(n) = floor(n phi^2 + 2 phi) all {} cases hold",
            corrected.cases
        ),
        Some(f) => format!("the corrected pair also fails {f}"),
    };
    Ok(literal.note(note))
}

fn binet_stern(bound: u64) -> Result<Tally> {
    let table = SternTable::new(bound as usize + 1);
    Ok(sweep(0..=bound, |n| {
        let v = binet_sigma_stern(n);
        let want = BigInt::from(table.get(n as usize + 1).clone());
        (v.as_rational_integer() != Some(&want)).then(|| format!("sum {v}, a(n+1) = {want}"))
    }))
}

fn c_integral(bound: u64) -> Result<Tally> {
    let digits = s_f_table(bound as usize);
    Ok(sweep(1..=bound, |n| {
        let v = crate::stern::sigma_convolution(&digits, n as usize - 1);
        (!v.si.is_zero()).then(|| format!("sum {v}"))
    }))
}

fn c_fibonacci_recurrence(bound: u64) -> Result<Tally> {
    let c = CSigmaTable::new(fu(bound + 3))?;
    let mut tally = Tally::default();
    for n in 5..=bound {
        tally = tally.merge(sweep(0..=fu(n - 2) as u64, |k| {
            let k = k as usize;
            let lhs = c.get(fu(n + 2) + k);
            let rhs = c.get(fu(n) + k) + c.get(k) + c.get(fu(n - 1) + k);
            (*lhs != rhs).then(|| format!("n = {n}, k = {k}: {lhs} != {rhs}"))
        }));
    }
    Ok(tally)
}

fn c_offsets(bound: u64) -> Result<Tally> {
    let c = CSigmaTable::new(fu(bound + 2) + 3)?;
    let check = |from: u64| {
        sweep(from..=bound, |n| {
            let first = c.get(fu(n)) + c.get(fu(n - 1) + 2);
            if first != *c.get(fu(n) + 1) {
                return Some(format!("c(F_n) + c(F_(n-1) + 2) = {first}, c(F_n + 1) = {}", c.get(fu(n) + 1)));
            }
            (c.get(fu(n) + 1) != c.get(fu(n + 1) + 2))
                .then(|| format!("c(F_n + 1) = {}, c(F_(n+1) + 2) = {}", c.get(fu(n) + 1), c.get(fu(n + 1) + 2)))
        })
    };
    let tally = check(4);
    let from_five = check(5);
    let note = match from_five.failure {
        None => format!("from n = 5 on all {} cases hold", from_five.cases),
        Some(f) => format!("from n = 5 on it still fails {f}"),
    };
    Ok(tally.note(note))
}

fn coons_tyler(exponent: u64) -> Result<Tally> {
    let target = 1.0 / 5f64.sqrt();
    let at_j30 = coons_tyler_ratio(jacobsthal(30));
    let mut t = single((at_j30 - 0.447_213_6).abs() <= 1e-6, || format!("ratio at J(30) is {at_j30:.9}"));
    let hi = 1usize << exponent;
    let table = SternTable::new(hi);
    let (arg, max) = coons_tyler_max(&table, 2, hi);
    t = t.merge(single((0.4470..=0.4473).contains(&max), || {
        format!("sweep max over 2..=2^{exponent} is {max:.6} at n = {arg}, outside [0.4470, 0.4473]")
    }));
    let tail_lo = (hi >> 10).max(2);
    let (tail_arg, tail_max) = coons_tyler_max(&table, tail_lo, hi);
    Ok(t.note(format!("ratio at J(30) = {at_j30:.9}, 1/sqrt(5) = {target:.9}, sweep max {max:.6} at n = {arg}"))
        .note(format!("max over {tail_lo}..={hi} is {tail_max:.6} at n = {tail_arg}")))
}

fn mertens(bound: u64) -> Result<Tally> {
    let s = stern_exponential_sum(bound)?;
    let t = single(s.within_contract(), || {
        format!("deviation {:.3e} over {} terms (sum {}, Mertens {})", s.deviation(), s.terms, s.sum, s.mertens)
    });
    Ok(Tally { cases: s.terms, ..t }.note(format!("deviation {:.3e}, Mertens sum {}", s.deviation(), s.mertens)))
}

fn q_inverse(depth: u64) -> Result<Tally> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let one = CfWord::from_u64s(&[1])?;
    let two = CfWord::from_u64s(&[2])?;
    let v1 = q_inverse_series(&one, 64)?;
    let v2 = q_inverse_series(&two, 64)?;
    let v3 = q_inverse_series(&CfWord::from_u64s(&[1; 40])?, 40)?;
    let v4 = q_inverse_series_periodic(&one, 64)?;
    let mut t = single((v1 - 1.0 / phi).abs() <= 1e-9, || format!("[1] gives {v1}"))
        .merge(single((v2 - phi.powi(-3)).abs() <= 1e-9, || format!("[2] gives {v2}")))
        .merge(single((v3 - 1.0 / 5f64.sqrt()).abs() <= 1e-9, || format!("forty ones give {v3}")))
        .merge(single((v4 - 1.0 / 5f64.sqrt()).abs() <= 1e-9, || format!("the periodic all-ones word gives {v4}")));
    let mut e = QEvaluator::new();
    for terms in [&[2u64][..], &[3], &[2, 2], &[1, 2], &[3, 1, 2]] {
        let cf = CfWord::from_u64s(terms)?;
        let (a, b) = q_preimage_interval(&cf);
        let target = crate::exact::cf_decode(&cf).to_f64().unwrap_or(f64::NAN);
        let got = e.approx((a + b) / 2.0, depth)?;
        t = t.merge(single((got - target).abs() <= 1e-3, || format!("{cf}: Q = {got}, expected {target}")));
    }
    Ok(t)
}

fn q_bracket(depth: u64) -> Result<Tally> {
    let mut e = QEvaluator::new();
    let mut t = Tally::default();
    for (k, m) in [(1u64, 5u64), (2, 6), (3, 7), (4, 9), (7, 12)] {
        let x = ratio(&nat(k), &fib(m));
        let (lo, hi) = e.bracket(&x, depth)?;
        let width = (hi - lo).to_f64().unwrap_or(f64::INFINITY);
        t = t.merge(single(width < 1e-4, || format!("x = {k}/F_{m}: bracket width {width:.3e}")));
    }
    Ok(t)
}

static CHECKS: &[Check] = &[
    Check { id: "printed-prefixes", description: "published prefixes, shift listings and crushed-array rows", default_bound: 0, max_bound: 0, run: printed_prefixes },
    Check { id: "b-closed-form", description: "b(k) from the recurrence equals the product of two Stern values, k <= bound", default_bound: 1 << 16, max_bound: 1 << 22, run: b_closed_form },
    Check { id: "stern-pairs", description: "coprime pairs with p + q <= bound map to an index and back", default_bound: 200, max_bound: 2000, run: stern_pairs },
    Check { id: "stern-indices", description: "Stern pairs at indices n <= bound map back to n", default_bound: 1 << 14, max_bound: 1 << 24, run: stern_indices },
    Check { id: "oplus-pairs", description: "pairs a, b <= bound with 4ab + 1 square map to an index and back", default_bound: 300, max_bound: 2000, run: oplus_pairs },
    Check { id: "oplus-indices", description: "b pairs at indices n <= bound map back to n", default_bound: 1 << 14, max_bound: 1 << 22, run: oplus_indices },
    Check { id: "box-inverse", description: "?(f(x)) = x on dyadics with denominator <= 2^bound", default_bound: 12, max_bound: 20, run: box_inverse },
    Check { id: "g-box-formula", description: "g(x) = f(2^(j+1) x - 1)(1 - j f(2x)) on dyadics with denominator 2^bound", default_bound: 12, max_bound: 18, run: g_box_formula },
    Check { id: "box-reciprocal", description: "f(2^-j) = 1/(j+1) for j <= bound", default_bound: 18, max_bound: 200, run: box_reciprocal },
    Check { id: "r-oracle", description: "subset-sum R equals the shift recursion for n <= bound", default_bound: 100_000, max_bound: 2_000_000, run: r_oracle },
    Check { id: "r-fibonacci-offset", description: "R(F_(n+2) + j) = R(F_n + j) + R(j) for j < F_(n-1), n <= bound", default_bound: 20, max_bound: 26, run: r_fibonacci_offset },
    Check { id: "r-row-symmetry", description: "R(F_m + k) = R(F_(m+1) - k) for 0 < k < F_(m-1), m <= bound", default_bound: 20, max_bound: 26, run: r_row_symmetry },
    Check { id: "q-mediant", description: "q(T(k), F_(n+1)) = q(k, F_n) and q(rho2(k), F_(n+2)) = q(k, F_n) * q(k-1, F_n), n <= bound", default_bound: 20, max_bound: 24, run: q_mediant },
    Check { id: "r-crushed-columns", description: "crushed-array columns of R step by R(j-1) every two rows and follow x(n+1) = x(n) + x(n-1) - x(n-2), rows <= bound", default_bound: 22, max_bound: 25, run: r_crushed_columns },
    Check { id: "beatty-shift", description: "Zeckendorf shift equals the certified floor of n phi + 1/phi for n <= bound", default_bound: 10_000, max_bound: 1_000_000, run: beatty_shift },
    Check { id: "beatty-partition", description: "rho2(n), n >= 1, and T(n), n >= 0, hit each of 1..=bound once", default_bound: 10_000, max_bound: 1_000_000, run: beatty_partition },
    Check { id: "triple-shift", description: "rho(rho(rho(n) + 1)) = rho(rho(rho(n)) + 1) + 1 for n <= bound", default_bound: 10_000, max_bound: 1_000_000, run: triple_shift },
    Check { id: "alpha-beta", description: "R(floor(n phi - 1/phi^2)) = R(n) and R(floor(n phi^2 + phi)) = R(n) + R(n+1) for 1 <= n <= bound", default_bound: 5000, max_bound: 200_000, run: alpha_beta },
    Check { id: "binet-stern", description: "the sigma sum over binary digit counts equals a(n+1) for n <= bound", default_bound: 1 << 12, max_bound: 1 << 15, run: binet_stern },
    Check { id: "c-integral", description: "the sigma-part of the sum defining c(n) vanishes for n <= bound", default_bound: 5000, max_bound: 30_000, run: c_integral },
    Check { id: "c-fibonacci-recurrence", description: "c(F_(n+2) + k) = c(F_n + k) + c(k) + c(F_(n-1) + k) for k <= F_(n-2), 5 <= n <= bound", default_bound: 18, max_bound: 24, run: c_fibonacci_recurrence },
    Check { id: "c-fibonacci-offsets", description: "c(F_n) + c(F_(n-1) + 2) = c(F_n + 1) = c(F_(n+1) + 2) for 4 <= n <= bound", default_bound: 18, max_bound: 24, run: c_offsets },
    Check { id: "coons-tyler", description: "a(n)/(3n)^(log2 phi) at J(30) is 1/sqrt(5) to 1e-6 and its max over 2..=2^bound lies in [0.4470, 0.4473]", default_bound: 20, max_bound: 24, run: coons_tyler },
    Check { id: "mertens", description: "exponential sum over Stern fractions with denominator < bound matches the Mertens sum", default_bound: 500, max_bound: 20_000, run: mertens },
    Check { id: "q-inverse-series", description: "inverse series closed forms, and Q at the series value against the continued fraction, at depth bound", default_bound: 30, max_bound: 34, run: q_inverse },
    Check { id: "q-bracket", description: "brackets for Q at k/F_m narrow below 1e-4 at depth bound", default_bound: 30, max_bound: 34, run: q_bracket },
];

pub fn checks() -> &'static [Check] {
    CHECKS
}

pub fn find_check(id: &str) -> Result<&'static Check> {
    CHECKS.iter().find(|c| c.id == id).ok_or_else(|| Error::Unknown { kind: "check", name: id.to_string() })
}

/// Runs one check inside a pool of `jobs` workers (`0` uses rayon's default).
pub fn run_check(id: &str, bound: Option<u64>, jobs: usize) -> Result<CheckOutcome> {
    let check = find_check(id)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start {jobs} workers: {e}")))?;
    pool.install(|| check.run(bound.unwrap_or(check.default_bound)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = CHECKS.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), CHECKS.len());
        assert!(find_check("nope").is_err());
    }

    #[test]
    fn quick_checks_pass_at_small_bounds() {
        for (id, bound) in [
            ("printed-prefixes", 0),
            ("b-closed-form", 512),
            ("stern-pairs", 40),
            ("stern-indices", 512),
            ("oplus-pairs", 40),
            ("oplus-indices", 512),
            ("box-inverse", 6),
            ("g-box-formula", 6),
            ("box-reciprocal", 10),
            ("r-oracle", 2000),
            ("r-fibonacci-offset", 12),
            ("q-mediant", 12),
            ("r-crushed-columns", 12),
            ("beatty-shift", 500),
            ("beatty-partition", 500),
            ("triple-shift", 500),
            ("binet-stern", 256),
            ("c-integral", 300),
            ("c-fibonacci-recurrence", 12),
            ("mertens", 60),
            ("q-bracket", 30),
        ] {
            let out = run_check(id, Some(bound), 2).unwrap();
            assert!(out.passed(), "{id}: {:?}", out.failure);
            assert!(out.cases > 0 || id == "printed-prefixes", "{id}");
        }
    }

    #[test]
    fn literal_statements_report_their_first_counterexample() {
        let sym = run_check("r-row-symmetry", Some(8), 1).unwrap();
        assert!(sym.failure.as_deref().unwrap().contains("m = 5"));
        let ab = run_check("alpha-beta", Some(50), 1).unwrap();
        assert!(ab.failure.as_deref().unwrap().starts_with("at 1:"));
        let cor = run_check("c-fibonacci-offsets", Some(12), 1).unwrap();
        assert!(cor.failure.as_deref().unwrap().starts_with("at 4:"));
        for out in [sym, ab, cor] {
            assert!(out.notes.iter().any(|n| n.contains("hold")), "{:?}", out.notes);
        }
    }

    #[test]
    fn outcome_is_independent_of_worker_count() {
        let a = run_check("alpha-beta", Some(200), 1).unwrap();
        let b = run_check("alpha-beta", Some(200), 3).unwrap();
        assert_eq!((a.cases, a.failure), (b.cases, b.failure));
        assert!(run_check("b-closed-form", Some(1 << 23), 1).is_err());
    }
}
