//! Consecutive Stern values enumerate the coprime pairs exactly once.

use diatomic::stern::{diatomic_row, stern_index, stern_pair};

fn main() {
    for j in 0..5 {
        let row: Vec<String> = diatomic_row(j).iter().map(ToString::to_string).collect();
        println!("row {j}: {}", row.join(" "));
    }
    for (p, q) in [(3u32, 2u32), (5, 8), (355, 113)] {
        let n = stern_index(p, q).unwrap();
        let back = stern_pair(n.clone());
        println!("({p}, {q}) -> {n} -> ({}, {})", back.left, back.right);
    }
    println!("(2, 4): {}", stern_index(2u32, 4u32).unwrap_err());
}
