//! Writes the representation graph to an SVG file.

use diatomic::fibrep::graph_g;

fn main() {
    let depth = 7;
    let g = graph_g(depth).unwrap();
    for n in 1..=depth + 1 {
        let values: Vec<String> = g.row(n).iter().map(|v| v.value.to_string()).collect();
        println!("row {n}: {}", values.join(" "));
    }
    let path = std::env::temp_dir().join("representation_graph.svg");
    std::fs::write(&path, g.to_svg(true)).unwrap();
    println!("wrote {}", path.display());
}
