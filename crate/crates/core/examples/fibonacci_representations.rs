//! Counting Fibonacci representations, by subsets and by the shift recursion.

use diatomic::fibrep::{classify, crushed_array_r, r_count, r_count_recursive, rho, rho2, t_shift, ShiftPreimage};

fn main() {
    let row: Vec<String> = (0..=20).map(|n| r_count(n).to_string()).collect();
    println!("R(0..20) = {}", row.join(", "));
    for n in [10u32, 11, 12] {
        let n = n.into();
        println!("rho({n}) = {}, rho2({n}) = {}, T({n}) = {}", rho(&n), rho2(&n), t_shift(&n));
    }
    for n in [11u32, 12] {
        match classify(&n.into()).unwrap() {
            ShiftPreimage::Rho2(m) => println!("{n} = rho2({m})"),
            ShiftPreimage::T(m) => println!("{n} = T({m})"),
        }
    }
    let big = diatomic::exact::fib(200) - 1u32;
    println!("R(F_200 - 1) = {}", r_count_recursive(big).unwrap());
    for (r, values) in crushed_array_r(6).unwrap().rows().iter().enumerate() {
        let v: Vec<String> = values.iter().map(ToString::to_string).collect();
        println!("row {}: {}", r + 1, v.join(" "));
    }
}
