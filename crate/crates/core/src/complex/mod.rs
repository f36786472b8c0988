//! Flag complexes, built from graphs as clique complexes.
//!
//! Vertices are indexed in declaration order and every derived ordering
//! (edges, simplices, directed-edge ids, spanning trees) follows that index
//! order, so simplex indices are reproducible across runs.

mod graph_format;
mod homology;
mod pi1;

use std::collections::HashMap;
use std::fmt;

pub use graph_format::{parse_graph, parse_graph_json, parse_graph_text, GraphParseError};
pub use homology::{boundary_matrix, HomologyGroup, HomologyResult};
pub use pi1::{SimplyConnectedStatus, SpanningTree, DEFAULT_TIETZE_BUDGET};

/// Errors raised when building or querying a complex.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("vertex `{0}` is declared twice")]
    DuplicateVertex(String),
    #[error("edge mentions unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("edge `{0}-{1}` is listed twice")]
    DuplicateEdge(String, String),
    #[error("`{0}` is not a valid vertex identifier")]
    BadIdentifier(String),
    #[error("a complex needs at least one vertex")]
    Empty,
    #[error("clique enumeration was capped at dimension {0}; the complex is not fully enumerated")]
    Truncated(usize),
    #[error("the complex is not connected")]
    Disconnected,
    #[error("`{0}` -> `{1}` is not an edge of the complex")]
    NotAnEdge(String, String),
    #[error("invalid directed cycle: {0}")]
    BadCycle(String),
}

/// A finite flag complex: a graph together with all of its cliques.
#[derive(Clone, Debug)]
pub struct FlagComplex {
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// Edges as `(u, v)` with `u < v`, sorted.
    edges: Vec<(usize, usize)>,
    edge_index: HashMap<(usize, usize), usize>,
    neighbors: Vec<Vec<usize>>,
    adjacency: Vec<Vec<bool>>,
    /// `simplices[k]` holds the (k+1)-cliques as sorted index tuples, sorted.
    simplices: Vec<Vec<Vec<usize>>>,
    dim_cap: Option<usize>,
    truncated: bool,
}

impl FlagComplex {
    /// The clique complex of a graph, with cliques enumerated up to `dim_cap`
    /// (all of them when `None`).
    pub fn from_graph<V: AsRef<str>>(
        vertices: &[V],
        edges: &[(V, V)],
        dim_cap: Option<usize>,
    ) -> Result<Self, ComplexError> {
        if vertices.is_empty() {
            return Err(ComplexError::Empty);
        }
        let mut names = Vec::with_capacity(vertices.len());
        let mut index = HashMap::new();
        for v in vertices {
            let v = v.as_ref();
            if !crate::syntax::is_identifier(v) {
                return Err(ComplexError::BadIdentifier(v.to_string()));
            }
            if index.insert(v.to_string(), names.len()).is_some() {
                return Err(ComplexError::DuplicateVertex(v.to_string()));
            }
            names.push(v.to_string());
        }
        let n = names.len();
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| ComplexError::UnknownVertex(s.to_string()));

        let mut adjacency = vec![vec![false; n]; n];
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (u, v) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if u == v {
                return Err(ComplexError::LoopEdge(names[u].clone()));
            }
            if adjacency[u][v] {
                return Err(ComplexError::DuplicateEdge(names[u].clone(), names[v].clone()));
            }
            adjacency[u][v] = true;
            adjacency[v][u] = true;
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        let edge_index = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let neighbors = (0..n).map(|u| (0..n).filter(|&v| adjacency[u][v]).collect()).collect();

        let mut complex = FlagComplex {
            names,
            index,
            edges: pairs,
            edge_index,
            neighbors,
            adjacency,
            simplices: Vec::new(),
            dim_cap,
            truncated: false,
        };
        complex.enumerate_cliques();
        Ok(complex)
    }

    /// Depth-first extension of each clique by larger common neighbours, which
    /// yields every clique exactly once; buckets are sorted afterwards.
    fn enumerate_cliques(&mut self) {
        let n = self.names.len();
        let max_dim = self.dim_cap.unwrap_or(n);
        let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut truncated = false;
        let mut stack: Vec<usize> = Vec::new();

        fn extend(
            c: &FlagComplex,
            stack: &mut Vec<usize>,
            candidates: &[usize],
            max_dim: usize,
            by_dim: &mut Vec<Vec<Vec<usize>>>,
            truncated: &mut bool,
        ) {
            let dim = stack.len() - 1;
            if by_dim.len() <= dim {
                by_dim.resize_with(dim + 1, Vec::new);
            }
            by_dim[dim].push(stack.clone());
            if dim == max_dim {
                if !candidates.is_empty() {
                    *truncated = true;
                }
                return;
            }
            for (i, &v) in candidates.iter().enumerate() {
                let next: Vec<usize> = candidates[i + 1..].iter().copied().filter(|&w| c.adjacency[v][w]).collect();
                stack.push(v);
                extend(c, stack, &next, max_dim, by_dim, truncated);
                stack.pop();
            }
        }

        for v in 0..n {
            let later: Vec<usize> = self.neighbors[v].iter().copied().filter(|&w| w > v).collect();
            stack.push(v);
            extend(self, &mut stack, &later, max_dim, &mut by_dim, &mut truncated);
            stack.pop();
        }
        for bucket in &mut by_dim {
            bucket.sort_unstable();
        }
        self.simplices = by_dim;
        self.truncated = truncated;
    }

    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Undirected edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u][v]
    }

    /// Neighbours of `v` in vertex order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// The k-simplices as sorted vertex tuples, lexicographically ordered.
    pub fn simplices(&self, k: usize) -> &[Vec<usize>] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    /// Dimension of the largest enumerated simplex.
    pub fn dimension(&self) -> usize {
        self.simplices.len() - 1
    }

    /// Face counts `(f_0, f_1, ...)`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn triangles(&self) -> &[Vec<usize>] {
        self.simplices(2)
    }

    /// Whether clique enumeration stopped at `dim_cap` with larger cliques remaining.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn dim_cap(&self) -> Option<usize> {
        self.dim_cap
    }

    /// Errors unless every clique has been enumerated.
    pub fn require_full(&self) -> Result<(), ComplexError> {
        match (self.truncated, self.dim_cap) {
            (true, Some(cap)) => Err(ComplexError::Truncated(cap)),
            _ => Ok(()),
        }
    }

    /// Whether a sorted vertex tuple spans a simplex (all pairs adjacent).
    pub fn spans_simplex(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.adjacency[u][v]))
    }

    /// Connected components, each sorted, listed by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in &self.neighbors[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Alternating sum of face counts.
    pub fn euler_characteristic(&self) -> Result<i64, ComplexError> {
        self.require_full()?;
        Ok(self.f_vector().iter().enumerate().map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) }).sum())
    }

    pub fn num_directed_edges(&self) -> usize {
        2 * self.edges.len()
    }

    /// Directed edge with the given id. Id `2i` runs along edge `i` from its
    /// smaller to its larger vertex, id `2i + 1` the other way.
    pub fn directed_edge(&self, id: usize) -> DirectedEdge {
        let (u, v) = self.edges[id / 2];
        if id.is_multiple_of(2) {
            DirectedEdge { initial: u, terminal: v }
        } else {
            DirectedEdge { initial: v, terminal: u }
        }
    }

    pub fn directed_edge_id(&self, e: DirectedEdge) -> Option<usize> {
        let i = self.edge_id(e.initial, e.terminal)?;
        Some(if e.initial < e.terminal { 2 * i } else { 2 * i + 1 })
    }

    /// Id of the edge from `u` to `v`, or an error naming both vertices.
    pub fn require_directed_edge(&self, u: usize, v: usize) -> Result<usize, ComplexError> {
        self.directed_edge_id(DirectedEdge { initial: u, terminal: v })
            .ok_or_else(|| ComplexError::NotAnEdge(self.names[u].clone(), self.names[v].clone()))
    }

    /// `[a>b]` for the directed edge with the given id.
    pub fn edge_label(&self, id: usize) -> String {
        let e = self.directed_edge(id);
        format!("[{}>{}]", self.names[e.initial], self.names[e.terminal])
    }

    /// Parses an edge letter `[a>b]` into a directed edge id.
    pub fn parse_edge_label(&self, s: &str) -> Result<usize, ComplexError> {
        let (a, b) = crate::syntax::edge_letter_parts(s).ok_or_else(|| ComplexError::BadIdentifier(s.to_string()))?;
        let u = self.vertex(a).ok_or_else(|| ComplexError::UnknownVertex(a.to_string()))?;
        let v = self.vertex(b).ok_or_else(|| ComplexError::UnknownVertex(b.to_string()))?;
        self.require_directed_edge(u, v)
    }

    pub fn reverse_edge(id: usize) -> usize {
        id ^ 1
    }

    /// Text form accepted by [`parse_graph_text`].
    pub fn to_graph_text(&self) -> String {
        let mut s = String::from("vertices:");
        for v in &self.names {
            s.push(' ');
            s.push_str(v);
        }
        s.push_str("\nedges:");
        for &(u, v) in &self.edges {
            s.push_str(&format!(" {}-{}", self.names[u], self.names[v]));
        }
        s.push('\n');
        s
    }
}

/// An oriented edge `e`, running from `initial` (ιe) to `terminal` (τe).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedEdge {
    pub initial: usize,
    pub terminal: usize,
}

impl DirectedEdge {
    pub fn reverse(self) -> Self {
        DirectedEdge { initial: self.terminal, terminal: self.initial }
    }
}

/// A closed directed edge-walk of length at least two, stored as directed
/// edge ids. Vertices and edges may repeat.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedCycle {
    edges: Vec<usize>,
}

impl DirectedCycle {
    pub fn new(complex: &FlagComplex, edges: Vec<usize>) -> Result<Self, ComplexError> {
        if edges.len() < 2 {
            return Err(ComplexError::BadCycle(format!("length {} is below 2", edges.len())));
        }
        if let Some(&bad) = edges.iter().find(|&&e| e >= complex.num_directed_edges()) {
            return Err(ComplexError::BadCycle(format!("unknown directed edge id {bad}")));
        }
        for i in 0..edges.len() {
            let e = complex.directed_edge(edges[i]);
            let f = complex.directed_edge(edges[(i + 1) % edges.len()]);
            if e.terminal != f.initial {
                return Err(ComplexError::BadCycle(format!(
                    "{} is not followed by an edge out of `{}`",
                    complex.edge_label(edges[i]),
                    complex.name(e.terminal)
                )));
            }
        }
        Ok(DirectedCycle { edges })
    }

    /// The closed walk through the given vertices, returning to the first.
    pub fn from_vertices(complex: &FlagComplex, vertices: &[usize]) -> Result<Self, ComplexError> {
        let l = vertices.len();
        let edges = (0..l)
            .map(|i| complex.require_directed_edge(vertices[i], vertices[(i + 1) % l]))
            .collect::<Result<Vec<_>, _>>()?;
        DirectedCycle::new(complex, edges)
    }

    /// Parses `a,b,c` (vertex names, closing back to the first).
    pub fn parse_vertices(complex: &FlagComplex, text: &str) -> Result<Self, ComplexError> {
        let vs = text
            .split(',')
            .map(|s| complex.vertex(s.trim()).ok_or_else(|| ComplexError::UnknownVertex(s.trim().to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        DirectedCycle::from_vertices(complex, &vs)
    }

    pub(crate) fn from_edges_unchecked(edges: Vec<usize>) -> Self {
        DirectedCycle { edges }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Starting from edge `k` instead of edge 0.
    pub fn rotated(&self, k: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.rotate_left(k % self.edges.len());
        DirectedCycle { edges }
    }

    /// The same walk traversed backwards.
    pub fn reversed(&self) -> Self {
        DirectedCycle { edges: self.edges.iter().rev().map(|&e| FlagComplex::reverse_edge(e)).collect() }
    }

    /// Whether this is the lexicographically least of its rotations.
    pub fn is_rotation_canonical(&self) -> bool {
        (1..self.edges.len()).all(|k| {
            let l = self.edges.len();
            (0..l).map(|i| self.edges[(i + k) % l]).cmp(self.edges.iter().copied()) != std::cmp::Ordering::Less
        })
    }

    pub fn display<'a>(&'a self, complex: &'a FlagComplex) -> impl fmt::Display + 'a {
        CycleDisplay { cycle: self, complex }
    }
}

struct CycleDisplay<'a> {
    cycle: &'a DirectedCycle,
    complex: &'a FlagComplex,
}

impl fmt::Display for CycleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &e) in self.cycle.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.complex.edge_label(e))?;
        }
        Ok(())
    }
}
