use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use super::beatty::sign_phi;
use super::rho;
use crate::error::{domain, Error, Result};
use crate::exact::{fib, Integer, Natural};

pub const MAX_GRAPH_DEPTH: usize = 16;

/// A point of `Z[φ] + i·Z[φ]`; each coordinate `u + vφ` is stored as `(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPoint {
    pub re: (Integer, Integer),
    pub im: (Integer, Integer),
}

impl ExactPoint {
    pub fn to_f64(&self) -> (f64, f64) {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let eval = |(u, v): &(Integer, Integer)| u.to_f64().unwrap_or(f64::NAN) + v.to_f64().unwrap_or(f64::NAN) * phi;
        (eval(&self.re), eval(&self.im))
    }

    /// Exact comparison of real parts.
    pub fn cmp_re(&self, other: &ExactPoint) -> Ordering {
        sign_phi(&(&self.re.0 - &other.re.0), &(&self.re.1 - &other.re.1))
    }
}

// φ^{-k} = (−1)^k (F_{k+1} − F_k φ)
fn inv_phi_pow(k: usize) -> (Integer, Integer) {
    let u = BigInt::from(fib(k as u64 + 1));
    let v = -BigInt::from(fib(k as u64));
    if k.is_multiple_of(2) {
        (u, v)
    } else {
        (-u, -v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    /// Length of the words that land here.
    pub length: usize,
    /// `[ω]`, the common value of those words.
    pub value: Natural,
    pub point: ExactPoint,
    /// Number of downward paths from the root, i.e. words of this length with this value.
    pub paths: Natural,
}

/// `(word length, value)`, the key of a vertex.
pub type VertexKey = (usize, Natural);

/// The representation graph on binary words of length `0 ..= depth`.
///
/// Row `n` (from 1) holds the words of length `n − 1`. A word `ω` sits at
/// `P(ω) = Σ_k φ^{−k} (2ω_k − 1 − i)` and is joined to `ω0` and `ω1`.
#[derive(Debug, Clone)]
pub struct GraphG {
    depth: usize,
    vertices: BTreeMap<VertexKey, Vertex>,
    edges: Vec<(VertexKey, VertexKey)>,
}

impl GraphG {
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn vertex(&self, length: usize, value: &Natural) -> Option<&Vertex> {
        self.vertices.get(&(length, value.clone()))
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.values()
    }

    pub fn edges(&self) -> &[(VertexKey, VertexKey)] {
        &self.edges
    }

    /// Vertices of row `n` (words of length `n − 1`), ordered by real coordinate.
    pub fn row(&self, n: usize) -> Vec<&Vertex> {
        let Some(length) = n.checked_sub(1) else { return Vec::new() };
        let mut row: Vec<&Vertex> = self
            .vertices
            .range((length, BigUint::zero())..(length + 1, BigUint::zero()))
            .map(|(_, v)| v)
            .collect();
        row.sort_by(|a, b| a.point.cmp_re(&b.point));
        row
    }

    /// Standalone SVG: real axis to the right, imaginary axis downward.
    pub fn to_svg(&self, labels: bool) -> String {
        let scale = 100.0;
        let pad = 20.0;
        let half_width = (1.0 + 5f64.sqrt()) / 2.0 * 2.0;
        let height = self.vertices().map(|v| -v.point.to_f64().1).fold(0.0, f64::max);
        let (w, h) = (2.0 * half_width * scale + 2.0 * pad, height * scale + 2.0 * pad);
        let place = |p: &ExactPoint| {
            let (x, y) = p.to_f64();
            ((x + half_width) * scale + pad, -y * scale + pad)
        };
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w:.3} {h:.3}" width="{w:.0}" height="{h:.0}">"#
        );
        let _ = writeln!(out, r##"<g stroke="#555" stroke-width="0.6">"##);
        for (a, b) in &self.edges {
            let (x1, y1) = place(&self.vertices[a].point);
            let (x2, y2) = place(&self.vertices[b].point);
            let _ = writeln!(out, r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#);
        }
        let _ = writeln!(out, "</g>");
        let _ = writeln!(out, r##"<g fill="#1f4e79">"##);
        for v in self.vertices() {
            let (x, y) = place(&v.point);
            let r = 4.0 * 0.8f64.powi(v.length as i32);
            let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="{r:.3}"/>"#);
        }
        let _ = writeln!(out, "</g>");
        if labels {
            let _ = writeln!(out, r#"<g font-family="sans-serif" text-anchor="middle">"#);
            for v in self.vertices() {
                let (x, y) = place(&v.point);
                let size = 10.0 * 0.85f64.powi(v.length as i32);
                let _ = writeln!(
                    out,
                    r#"<text x="{x:.3}" y="{:.3}" font-size="{size:.2}">{}</text>"#,
                    y - size * 0.6,
                    v.value
                );
            }
            let _ = writeln!(out, "</g>");
        }
        out.push_str("</svg>\n");
        out
    }
}

pub fn graph_g(depth: usize) -> Result<GraphG> {
    if depth > MAX_GRAPH_DEPTH {
        return Err(domain(format!("graph depth {depth} exceeds {MAX_GRAPH_DEPTH}")));
    }
    let mut vertices = BTreeMap::new();
    let mut edges = Vec::new();
    let root = Vertex { length: 0, value: BigUint::zero(), point: ExactPoint::default(), paths: BigUint::one() };
    vertices.insert((0, BigUint::zero()), root);
    for length in 0..depth {
        let step = inv_phi_pow(length);
        let parents: Vec<Vertex> = vertices
            .range((length, BigUint::zero())..(length + 1, BigUint::zero()))
            .map(|(_, v)| v.clone())
            .collect();
        for parent in parents {
            let shifted = rho(&parent.value);
            for digit in [false, true] {
                let sign = if digit { BigInt::one() } else { -BigInt::one() };
                let point = ExactPoint {
                    re: (&parent.point.re.0 + &sign * &step.0, &parent.point.re.1 + &sign * &step.1),
                    im: (&parent.point.im.0 - &step.0, &parent.point.im.1 - &step.1),
                };
                let value = &shifted + u32::from(digit);
                let key = (length + 1, value.clone());
                match vertices.get_mut(&key) {
                    Some(child) => {
                        if child.point != point {
                            return Err(Error::Integrity(format!(
                                "words of length {} and value {value} land on different points",
                                length + 1
                            )));
                        }
                        child.paths += &parent.paths;
                    }
                    None => {
                        let paths = parent.paths.clone();
                        vertices.insert(key.clone(), Vertex { length: length + 1, value, point, paths });
                    }
                }
                edges.push(((length, parent.value.clone()), key));
            }
        }
    }
    Ok(GraphG { depth, vertices, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{fibs_through, ZeckendorfWord};
    use crate::fibrep::RTable;

    fn nat(v: u64) -> Natural {
        v.into()
    }

    fn word_point(word: &str) -> (f64, f64) {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        word.chars().enumerate().fold((0.0, 0.0), |(x, y), (k, c)| {
            let w = phi.powi(-(k as i32));
            let d = if c == '1' { 1.0 } else { -1.0 };
            (x + w * d, y - w)
        })
    }

    #[test]
    fn single_letter_words() {
        let g = graph_g(1).unwrap();
        let zero = g.vertex(1, &nat(0)).unwrap().point.to_f64();
        let one = g.vertex(1, &nat(1)).unwrap().point.to_f64();
        assert_eq!(zero, (-1.0, -1.0));
        assert_eq!(one, (1.0, -1.0));
        assert!(graph_g(17).is_err());
    }

    #[test]
    fn path_count_example() {
        let g = graph_g(3).unwrap();
        assert_eq!(g.vertex(3, &nat(3)).unwrap().paths, nat(2));
    }

    #[test]
    fn points_match_every_word() {
        let g = graph_g(10).unwrap();
        for len in 0..=10usize {
            for mask in 0u32..(1 << len) {
                let word: String = (0..len).map(|i| if mask >> (len - 1 - i) & 1 == 1 { '1' } else { '0' }).collect();
                let value = word.parse::<ZeckendorfWord>().map(|w| w.value()).unwrap_or_default();
                let v = g.vertex(len, &value).expect("vertex exists");
                let (x, y) = v.point.to_f64();
                let (ex, ey) = word_point(&word);
                assert!((x - ex).abs() < 1e-9 && (y - ey).abs() < 1e-9, "{word}");
            }
        }
    }

    #[test]
    fn rows_are_consecutive_and_ordered() {
        let g = graph_g(12).unwrap();
        for n in 1..=13usize {
            let values: Vec<Natural> = g.row(n).into_iter().map(|v| v.value.clone()).collect();
            let top = fib(n as u64 + 2) - 2u32;
            let expected: Vec<Natural> = (0..=u64::try_from(&top).unwrap()).map(nat).collect();
            assert_eq!(values, expected, "row {n}");
        }
        assert_eq!(graph_g(6).unwrap().row(6).len(), 20);
    }

    // Paths to a vertex count representations using the weights available at that length.
    #[test]
    fn path_counts_are_restricted_representation_counts() {
        let depth = 12;
        let g = graph_g(depth).unwrap();
        let r = RTable::new(1000);
        for v in g.vertices() {
            let weights = &fibs_through(&fib(v.length as u64 + 1))[..v.length];
            let mut counts = vec![0u64; usize::try_from(&v.value).unwrap() + 1];
            counts[0] = 1;
            for w in weights {
                let w = usize::try_from(w).unwrap();
                for n in (w..counts.len()).rev() {
                    counts[n] += counts[n - w];
                }
            }
            assert_eq!(v.paths, nat(*counts.last().unwrap()));
            if v.value < fib(v.length as u64 + 2) {
                assert_eq!(&v.paths, r.get(usize::try_from(&v.value).unwrap()));
            }
        }
    }

    #[test]
    fn svg_is_well_formed() {
        let svg = graph_g(6).unwrap().to_svg(true);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains("viewBox"));
        let circles = svg.matches("<circle").count();
        assert_eq!(circles, graph_g(6).unwrap().vertices().count());
        assert!(svg.contains("<text"));
        assert!(!graph_g(6).unwrap().to_svg(false).contains("<text"));
    }
}
