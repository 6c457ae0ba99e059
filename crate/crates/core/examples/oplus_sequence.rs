//! The sequence built on a ⊕ b = a + b + √(4ab + 1) and its pair bijection.

use diatomic::oplus::{b_closed, b_pair, b_pair_index, oplus, BTable};

fn main() {
    let t = BTable::new(27).unwrap();
    let prefix: Vec<String> = (1..=27).map(|n| t.get(n).to_string()).collect();
    println!("b(1..27) = {}", prefix.join(", "));
    println!("2 ⊕ 6 = {}", oplus(&2u32.into(), &6u32.into()).unwrap());
    println!("b(1000) = {}", b_closed(1000u32).unwrap());
    let p = b_pair(10u32).unwrap();
    println!("index 10 <-> ({}, {}) <-> {}", p.left, p.right, b_pair_index(p.left.clone(), p.right.clone()).unwrap());
}
