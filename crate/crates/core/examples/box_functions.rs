//! The box function and the question-mark function undo each other.

use diatomic::boxfn::{conway_f, question_mark};
use diatomic::exact::{DyadicRational, ExactRational};

fn main() {
    for (k, n) in [(1u32, 2u64), (3, 3), (5, 4), (1, 10)] {
        let d = DyadicRational::new(k, n);
        let y = conway_f(&d).unwrap();
        println!("f({d}) = {y}, ?({y}) = {}", question_mark(&y).unwrap());
    }
    let x = ExactRational::new(5.into(), 13.into());
    println!("?(5/13) = {}", question_mark(&x).unwrap());
}
