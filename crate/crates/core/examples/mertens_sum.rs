//! The exponential sum over Stern fractions against the Mertens sum.

use diatomic::stern::stern_exponential_sum;

fn main() {
    for x in [100, 500, 2000, 5000] {
        let s = stern_exponential_sum(x).unwrap();
        println!(
            "x = {x:>5}: {} fractions, sum = {:.9}, Mertens = {:>3}, |difference| = {:.2e}",
            s.terms,
            s.sum.re,
            s.mertens,
            s.deviation()
        );
    }
}
