use serde::Serialize;

use super::{ComplexError, FlagComplex};
use crate::presentations::{Presentation, TietzeStatus};
use crate::words::{Alphabet, Letter, Word};

/// Default number of elementary Tietze moves spent certifying simple connectivity.
pub const DEFAULT_TIETZE_BUDGET: usize = 10_000;

/// Breadth-first spanning tree; neighbours are visited in vertex order.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
}

impl SpanningTree {
    pub fn breadth_first(complex: &FlagComplex, root: usize) -> Result<Self, ComplexError> {
        let n = complex.num_vertices();
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([root]);
        seen[root] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in complex.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    depth[w] = depth[u] + 1;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached < n {
            return Err(ComplexError::Disconnected);
        }
        Ok(SpanningTree { root, parent, depth })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn is_tree_edge(&self, u: usize, v: usize) -> bool {
        self.parent[u] == Some(v) || self.parent[v] == Some(u)
    }

    /// Vertices of the tree path from `a` to `b`, both included.
    pub fn vertex_path(&self, a: usize, b: usize) -> Vec<usize> {
        let (mut x, mut y) = (a, b);
        let mut up = vec![x];
        let mut down = vec![y];
        while self.depth[x] > self.depth[y] {
            x = self.parent[x].expect("non-root has a parent");
            up.push(x);
        }
        while self.depth[y] > self.depth[x] {
            y = self.parent[y].expect("non-root has a parent");
            down.push(y);
        }
        while x != y {
            x = self.parent[x].expect("non-root has a parent");
            y = self.parent[y].expect("non-root has a parent");
            up.push(x);
            down.push(y);
        }
        down.pop();
        up.extend(down.into_iter().rev());
        up
    }
}

/// Outcome of trying to certify that π₁ is trivial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SimplyConnectedStatus {
    /// The π₁ presentation simplified to the empty presentation.
    CertifiedTrivial,
    /// H₁ is nonzero.
    CertifiedNontrivial,
    /// Neither certificate was found within budget.
    Unknown,
}

impl FlagComplex {
    /// Edge-path presentation of π₁ based at `basepoint`: one generator per
    /// edge outside the breadth-first tree, one relator per triangle with tree
    /// edges deleted. Relators that become trivial are dropped.
    pub fn pi1_presentation(&self, basepoint: usize) -> Result<Presentation, ComplexError> {
        let tree = SpanningTree::breadth_first(self, basepoint)?;
        let mut generators = Vec::new();
        let mut gen_of_edge = vec![None; self.edges().len()];
        for (i, &(u, v)) in self.edges().iter().enumerate() {
            if !tree.is_tree_edge(u, v) {
                gen_of_edge[i] = Some(generators.len());
                generators.push(format!("[{}>{}]", self.name(u), self.name(v)));
            }
        }
        // traversing u -> v along edge (min, max)
        let step = |u: usize, v: usize| -> Option<Letter> {
            let g = gen_of_edge[self.edge_id(u, v)?]?;
            Some(if u < v { Letter::pos(g) } else { Letter::neg(g) })
        };
        let relators = self
            .triangles()
            .iter()
            .map(|t| {
                let (a, b, c) = (t[0], t[1], t[2]);
                Word::new(Alphabet::Symbols, [step(a, b), step(b, c), step(c, a)].into_iter().flatten())
            })
            .filter(|w| !w.is_empty())
            .collect();
        let p = Presentation::new(generators, relators).expect("edge names are valid generators");
        Ok(p.with_provenance(format!("construction: pi1 edge-path group, basepoint {}", self.name(basepoint))))
    }

    /// Certifies nontriviality through H₁ or triviality through bounded Tietze
    /// simplification; anything else is `Unknown`.
    pub fn simply_connected_status(&self, budget: usize) -> Result<SimplyConnectedStatus, ComplexError> {
        if !self.is_connected() {
            return Err(ComplexError::Disconnected);
        }
        let p = self.pi1_presentation(0)?;
        if !p.abelianization().is_trivial() {
            return Ok(SimplyConnectedStatus::CertifiedNontrivial);
        }
        let out = p.tietze_simplify(budget);
        Ok(match (out.status, out.presentation.is_empty_presentation()) {
            (TietzeStatus::Fixpoint, true) => SimplyConnectedStatus::CertifiedTrivial,
            _ => SimplyConnectedStatus::Unknown,
        })
    }
}
