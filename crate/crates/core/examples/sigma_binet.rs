//! Sums of sixth roots of unity indexed by digit counts.

use diatomic::sigma_binet::{c_sigma, crushed_array_c, s_f};
use diatomic::stern::{binet_sigma_stern, stern};

fn main() {
    for n in [5u64, 17, 100] {
        println!("sigma sum for {n} = {}, a({}) = {}", binet_sigma_stern(n), n + 1, stern(n + 1));
    }
    let c: Vec<String> = (1..=23).map(|n| c_sigma(n).unwrap().to_string()).collect();
    println!("c(1..23) = {}", c.join(", "));
    println!("s_F(27) = {}", s_f(&27u32.into()));
    for (r, row) in crushed_array_c(7).unwrap().iter().enumerate() {
        let v: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("row {}: {}", r + 1, v.join(" "));
    }
}
