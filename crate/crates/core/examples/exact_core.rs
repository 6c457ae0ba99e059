//! Fibonacci numbers, Zeckendorf words, continued fractions and Z[σ].

use diatomic::exact::{cf_decode, cf_encode, fib, zeck_encode, EisensteinInt, ExactRational};

fn main() {
    println!("F_100 = {}", fib(100));
    for n in [3u32, 32, 100] {
        let w = zeck_encode(&n.into());
        println!("{n:>4} = [{w}]_F, {} terms", w.popcount());
    }
    let x = ExactRational::new(2.into(), 5.into());
    let cf = cf_encode(&x).unwrap();
    println!("2/5 = {cf} = {}", cf_decode(&cf));
    let s = EisensteinInt::sigma();
    println!("σ² = {}, σ⁶ = {}, N(2 + 3σ) = {}", s.pow(2), s.pow(6), EisensteinInt::new(2, 3).norm());
}
