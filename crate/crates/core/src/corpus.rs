//! Small named complexes used throughout the tests and documentation.

use crate::complex::FlagComplex;

fn build(vertices: &[&str], edges: &[(&str, &str)]) -> FlagComplex {
    FlagComplex::from_graph(vertices, edges, None).expect("corpus complexes are well formed")
}

pub fn point() -> FlagComplex {
    build(&["a"], &[])
}

/// `n` isolated vertices `v0, v1, ...`.
pub fn points(n: usize) -> FlagComplex {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    build(&refs, &[])
}

pub fn edge() -> FlagComplex {
    build(&["a", "b"], &[("a", "b")])
}

/// The path `a - b - c`.
pub fn path3() -> FlagComplex {
    build(&["a", "b", "c"], &[("a", "b"), ("b", "c")])
}

/// The full triangle on `a, b, c`.
pub fn k3() -> FlagComplex {
    build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])
}

/// The 4-cycle `a - b - c - d - a`.
pub fn square() -> FlagComplex {
    build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])
}

/// Join of `k` pairs of points: vertices `p0 q0 p1 q1 ...`, every pair
/// adjacent except `p_i, q_i`.
pub fn join_of_pairs(k: usize) -> FlagComplex {
    let names: Vec<String> = (0..k).flat_map(|i| [format!("p{i}"), format!("q{i}")]).collect();
    let mut edges = Vec::new();
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            if i / 2 != j / 2 {
                edges.push((names[i].as_str(), names[j].as_str()));
            }
        }
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    build(&refs, &edges)
}

/// The octahedron, with antipodal pairs `x0 x1`, `y0 y1`, `z0 z1`.
pub fn octahedron() -> FlagComplex {
    let v = ["x0", "x1", "y0", "y1", "z0", "z1"];
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            if i / 2 != j / 2 {
                edges.push((v[i], v[j]));
            }
        }
    }
    build(&v, &edges)
}
