//! Binet-style sums over Zeckendorf digit counts.
//!
//! `c_n = Σ_{k=0}^{n−1} σ^{s_F(k)} σ̄^{s_F(n−1−k)}` with `σ = e^{iπ/3}`. The sum
//! is fixed by conjugation, hence a rational integer.

mod conjectures;

pub use conjectures::{conjecture_report, ConjectureId, ConjectureOutcome, ConjectureReport, REPORT_SCHEMA_VERSION};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{domain, Error, Result};
use crate::exact::{fib, zeck_encode, EisensteinInt, Integer, Natural};
use crate::stern::sigma_convolution;

/// Number of terms in the Zeckendorf representation of `n`.
pub fn s_f(n: &Natural) -> u64 {
    zeck_encode(n).popcount()
}

/// `s_F(0) ..= s_F(limit)`, using `s_F(n) = 1 + s_F(n − F)` for the largest `F <= n`.
pub fn s_f_table(limit: usize) -> Vec<u8> {
    let mut out = vec![0u8; limit + 1];
    let (mut f, mut next) = (1usize, 2usize);
    for n in 1..=limit {
        while next <= n {
            (f, next) = (next, f + next);
        }
        out[n] = out[n - f] + 1;
    }
    out
}

/// The full `Z[σ]` value of the sum defining `c_n`, `n >= 1`.
pub fn c_sigma_exact(n: u64) -> Result<EisensteinInt> {
    if n == 0 {
        return Err(domain("c_n is defined for n >= 1"));
    }
    let n = usize::try_from(n).map_err(|_| Error::RangeTooLarge(n.to_string()))?;
    Ok(sigma_convolution(&s_f_table(n - 1), n - 1))
}

/// `c_n` for `n >= 1`; fails with an integrity error if the σ-part is nonzero.
pub fn c_sigma(n: u64) -> Result<Integer> {
    integral(c_sigma_exact(n)?, n as usize)
}

fn integral(v: EisensteinInt, n: usize) -> Result<Integer> {
    match v.as_rational_integer() {
        Some(c) => Ok(c.clone()),
        None => Err(Error::Integrity(format!("c_{n} = {v} is not a rational integer"))),
    }
}

/// `c_0 ..= c_len`, with `c_0 = 0` (the empty sum).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CSigmaTable {
    values: Vec<Integer>,
}

impl CSigmaTable {
    /// Term-by-term sums; quadratic in `len`.
    pub fn exact(len: usize) -> Result<Self> {
        let digits = s_f_table(len);
        let mut values = vec![BigInt::zero()];
        for n in 1..=len {
            values.push(integral(sigma_convolution(&digits, n - 1), n)?);
        }
        Ok(CSigmaTable { values })
    }

    /// All sums at once as the autocorrelation `(A ⋆ Ā)[n − 1]` with `A_k = σ^{s_F(k)}`,
    /// through a floating FFT. Each value is accepted only if it lies within `1/8` of an
    /// integer on the real axis; the error bound is many orders of magnitude smaller.
    pub fn new(len: usize) -> Result<Self> {
        if len == 0 {
            return Ok(CSigmaTable { values: vec![BigInt::zero()] });
        }
        let digits = s_f_table(len - 1);
        let size = (2 * len).next_power_of_two();
        let unit = |d: u8| Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3 * f64::from(d % 6));
        let mut a: Vec<Complex64> = digits.iter().map(|&d| unit(d)).collect();
        a.resize(size, Complex64::zero());
        let mut b: Vec<Complex64> = digits.iter().map(|&d| unit(d).conj()).collect();
        b.resize(size, Complex64::zero());
        let mut planner = FftPlanner::<f64>::new();
        let forward = planner.plan_fft_forward(size);
        forward.process(&mut a);
        forward.process(&mut b);
        let mut prod: Vec<Complex64> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
        planner.plan_fft_inverse(size).process(&mut prod);
        let scale = size as f64;
        let mut values = vec![BigInt::zero()];
        for n in 1..=len {
            let z = prod[n - 1] / scale;
            let r = z.re.round();
            if (z.re - r).abs() > 0.125 || z.im.abs() > 0.125 {
                return Err(Error::Integrity(format!("c_{n} ≈ {z} is not near an integer")));
            }
            values.push(BigInt::from(r as i64));
        }
        Ok(CSigmaTable { values })
    }

    pub fn get(&self, n: usize) -> &Integer {
        &self.values[n]
    }

    pub fn len(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.values.len() == 1
    }

    pub fn as_slice(&self) -> &[Integer] {
        &self.values
    }
}

pub const MAX_C_CRUSHED_ROWS: usize = 25;

fn fib_usize(n: usize) -> usize {
    usize::try_from(fib(n as u64)).expect("small Fibonacci number")
}

// Row r (from 1) covers indices F_{r+1} ..= F_{r+2} − 1.
fn crushed_rows<T: Clone>(values: &[T], rows: usize) -> Vec<Vec<T>> {
    (1..=rows).map(|r| values[fib_usize(r + 1)..fib_usize(r + 2)].to_vec()).collect()
}

/// Rows of `c` between consecutive Fibonacci cut points, left-aligned.
pub fn crushed_array_c(rows: usize) -> Result<Vec<Vec<Integer>>> {
    if rows > MAX_C_CRUSHED_ROWS {
        return Err(domain(format!("at most {MAX_C_CRUSHED_ROWS} rows, asked for {rows}")));
    }
    let table = CSigmaTable::new(fib_usize(rows + 2))?;
    Ok(crushed_rows(table.as_slice(), rows))
}

/// The same cut for `s_F`; its columns are constant.
pub fn crushed_array_sf(rows: usize) -> Result<Vec<Vec<u8>>> {
    if rows > MAX_C_CRUSHED_ROWS {
        return Err(domain(format!("at most {MAX_C_CRUSHED_ROWS} rows, asked for {rows}")));
    }
    Ok(crushed_rows(&s_f_table(fib_usize(rows + 2)), rows))
}

/// Floating value of an exact `c_n`, for plotting.
pub fn c_to_f64(c: &Integer) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}
