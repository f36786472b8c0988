//! Elementary homotopies of closed edge-walks and their effect on the
//! relators `c^[n]`.
//!
//! Move file syntax, one move per line (`#` comments allowed):
//!
//! ```text
//! ins <pos> <edge>          insert e ē before position pos
//! del <pos>                 delete a backtrack e ē starting at pos
//! tri <pos> <e> <f> <g>     replace e at pos by ḡ f̄, (e, f, g) a triangle
//! rot <k>                   start the walk at position k
//! ```

use std::collections::{HashMap, VecDeque};

use super::{cn_relator, BbContext, BbError};
use crate::complex::{DirectedCycle, FlagComplex};
use crate::syntax::{self, ParseError};
use crate::words::{Alphabet, Word};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    #[error("position {pos} is out of range for a walk of length {len}")]
    OutOfRange { pos: usize, len: usize },
    #[error("edge does not leave the walk's vertex at position {0}")]
    NotIncident(usize),
    #[error("positions {0} and {0}+1 are not a backtrack")]
    NotABacktrack(usize),
    #[error("the edge at position {0} is not the triangle's first edge")]
    EdgeMismatch(usize),
    #[error("the named edges do not form a directed triangle")]
    NotATriangle,
    #[error("the move would leave a walk shorter than 2")]
    Degenerate,
    #[error("word is not of the form e_1^n ... e_l^n for a closed walk")]
    NotACycleRelator,
}

/// An elementary change to a closed walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomotopyMove {
    Insert { pos: usize, edge: usize },
    Delete { pos: usize },
    Triangle { pos: usize, e: usize, f: usize, g: usize },
    Rotate { k: usize },
}

fn rev(e: usize) -> usize {
    FlagComplex::reverse_edge(e)
}

impl HomotopyMove {
    pub fn apply(&self, complex: &FlagComplex, cycle: &DirectedCycle) -> Result<DirectedCycle, MoveError> {
        let edges = cycle.edges();
        let len = edges.len();
        let mut out = edges.to_vec();
        match *self {
            HomotopyMove::Rotate { k } => out.rotate_left(k % len),
            HomotopyMove::Insert { pos, edge } => {
                if pos > len {
                    return Err(MoveError::OutOfRange { pos, len });
                }
                if edge >= complex.num_directed_edges() {
                    return Err(MoveError::NotIncident(pos));
                }
                let at = complex.directed_edge(edges[pos % len]).initial;
                if complex.directed_edge(edge).initial != at {
                    return Err(MoveError::NotIncident(pos));
                }
                out.splice(pos..pos, [edge, rev(edge)]);
            }
            HomotopyMove::Delete { pos } => {
                if pos >= len {
                    return Err(MoveError::OutOfRange { pos, len });
                }
                let next = (pos + 1) % len;
                if edges[next] != rev(edges[pos]) {
                    return Err(MoveError::NotABacktrack(pos));
                }
                if len <= 2 {
                    return Err(MoveError::Degenerate);
                }
                if next == 0 {
                    out.pop();
                    out.remove(0);
                } else {
                    out.drain(pos..pos + 2);
                }
            }
            HomotopyMove::Triangle { pos, e, f, g } => {
                if pos >= len {
                    return Err(MoveError::OutOfRange { pos, len });
                }
                if !is_triangle(complex, e, f, g) {
                    return Err(MoveError::NotATriangle);
                }
                if edges[pos] != e {
                    return Err(MoveError::EdgeMismatch(pos));
                }
                out.splice(pos..pos + 1, [rev(g), rev(f)]);
            }
        }
        Ok(DirectedCycle::from_edges_unchecked(out))
    }

    pub fn render(&self, complex: &FlagComplex) -> String {
        match *self {
            HomotopyMove::Insert { pos, edge } => format!("ins {pos} {}", complex.edge_label(edge)),
            HomotopyMove::Delete { pos } => format!("del {pos}"),
            HomotopyMove::Triangle { pos, e, f, g } => {
                format!("tri {pos} {} {} {}", complex.edge_label(e), complex.edge_label(f), complex.edge_label(g))
            }
            HomotopyMove::Rotate { k } => format!("rot {k}"),
        }
    }
}

fn is_triangle(complex: &FlagComplex, e: usize, f: usize, g: usize) -> bool {
    let n = complex.num_directed_edges();
    if e >= n || f >= n || g >= n {
        return false;
    }
    let (e, f, g) = (complex.directed_edge(e), complex.directed_edge(f), complex.directed_edge(g));
    e.terminal == f.initial && f.terminal == g.initial && g.terminal == e.initial
}

/// Parses a move file.
pub fn parse_moves(complex: &FlagComplex, text: &str) -> Result<Vec<HomotopyMove>, ParseError> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let toks = syntax::tokens(syntax::strip_comment(raw), 0);
        let Some(head) = toks.first() else { continue };
        let num = |i: usize| -> Result<usize, ParseError> {
            let t = toks.get(i).ok_or_else(|| ParseError::new(line_no, raw.len() + 1, "missing argument"))?;
            t.text
                .parse()
                .map_err(|_| ParseError::new(line_no, t.column, format!("expected a position, found `{}`", t.text)))
        };
        let edge = |i: usize| -> Result<usize, ParseError> {
            let t = toks.get(i).ok_or_else(|| ParseError::new(line_no, raw.len() + 1, "missing edge"))?;
            complex.parse_edge_label(t.text).map_err(|e| ParseError::new(line_no, t.column, e.to_string()))
        };
        let (mv, arity) = match head.text {
            "ins" => (HomotopyMove::Insert { pos: num(1)?, edge: edge(2)? }, 3),
            "del" => (HomotopyMove::Delete { pos: num(1)? }, 2),
            "tri" => (HomotopyMove::Triangle { pos: num(1)?, e: edge(2)?, f: edge(3)?, g: edge(4)? }, 5),
            "rot" => (HomotopyMove::Rotate { k: num(1)? }, 2),
            other => return Err(ParseError::new(line_no, head.column, format!("unknown move `{other}`"))),
        };
        if let Some(extra) = toks.get(arity) {
            return Err(ParseError::new(line_no, extra.column, "unexpected trailing argument"));
        }
        out.push(mv);
    }
    Ok(out)
}

pub fn render_moves(complex: &FlagComplex, moves: &[HomotopyMove]) -> String {
    moves.iter().map(|m| m.render(complex) + "\n").collect()
}

/// Result of a bounded homotopy search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveSearch {
    Found(Vec<HomotopyMove>),
    /// The budget ran out; this says nothing about whether the walks are homotopic.
    Unknown,
}

impl BbContext<'_> {
    /// Recovers the closed walk `c` from the relator `c^[n]`.
    pub fn decode_relator(&self, w: &Word, n: i64) -> Result<DirectedCycle, BbError> {
        if n == 0 {
            return Err(BbError::ZeroExponent);
        }
        if w.alphabet() != Alphabet::DirectedEdges {
            return Err(BbError::WrongAlphabet { expected: Alphabet::DirectedEdges, found: w.alphabet() });
        }
        let mut edges = Vec::new();
        for (g, k) in w.syllables() {
            if k != n {
                return Err(MoveError::NotACycleRelator.into());
            }
            edges.push(g);
        }
        DirectedCycle::new(self.complex(), edges).map_err(|_| MoveError::NotACycleRelator.into())
    }

    /// Maps `c^[n]` to `c'^[n]`, where `c'` is `c` after the move.
    pub fn apply_homotopy_move(&self, relator: &Word, mv: &HomotopyMove, n: i64) -> Result<Word, BbError> {
        let cycle = self.decode_relator(relator, n)?;
        let moved = mv.apply(self.complex(), &cycle)?;
        cn_relator(&moved, n)
    }

    /// Breadth-first search for moves turning `from` into `to`, expanding at
    /// most `budget` walks. Walks never grow beyond two edges longer than the
    /// longer endpoint.
    pub fn find_move_sequence(&self, from: &DirectedCycle, to: &DirectedCycle, budget: usize) -> MoveSearch {
        let complex = self.complex();
        let cap = from.len().max(to.len()) + 2;
        let mut parent: HashMap<DirectedCycle, Option<(DirectedCycle, HomotopyMove)>> = HashMap::new();
        parent.insert(from.clone(), None);
        let mut queue = VecDeque::from([from.clone()]);
        let mut expanded = 0;
        while let Some(cur) = queue.pop_front() {
            if &cur == to {
                let mut moves = Vec::new();
                let mut at = cur;
                while let Some(Some((prev, mv))) = parent.get(&at) {
                    moves.push(*mv);
                    at = prev.clone();
                }
                moves.reverse();
                return MoveSearch::Found(moves);
            }
            if expanded == budget {
                return MoveSearch::Unknown;
            }
            expanded += 1;
            for mv in candidate_moves(complex, &cur, cap) {
                if let Ok(next) = mv.apply(complex, &cur) {
                    if !parent.contains_key(&next) {
                        parent.insert(next.clone(), Some((cur.clone(), mv)));
                        queue.push_back(next);
                    }
                }
            }
        }
        MoveSearch::Unknown
    }
}

/// Every move applicable to `cycle` that keeps its length at most `cap`.
pub(crate) fn candidate_moves(complex: &FlagComplex, cycle: &DirectedCycle, cap: usize) -> Vec<HomotopyMove> {
    let edges = cycle.edges();
    let len = edges.len();
    let mut out: Vec<HomotopyMove> = (1..len).map(|k| HomotopyMove::Rotate { k }).collect();
    for pos in 0..len {
        if edges[(pos + 1) % len] == rev(edges[pos]) && len > 2 {
            out.push(HomotopyMove::Delete { pos });
        }
    }
    if len + 2 <= cap {
        for pos in 0..=len {
            let v = complex.directed_edge(edges[pos % len]).initial;
            for &w in complex.neighbors(v) {
                let edge = complex.require_directed_edge(v, w).expect("neighbours share an edge");
                out.push(HomotopyMove::Insert { pos, edge });
            }
        }
    }
    if len < cap {
        for (pos, &e) in edges.iter().enumerate() {
            let de = complex.directed_edge(e);
            for &w in complex.neighbors(de.terminal) {
                if w != de.initial && complex.adjacent(w, de.initial) {
                    let f = complex.require_directed_edge(de.terminal, w).expect("adjacent");
                    let g = complex.require_directed_edge(w, de.initial).expect("adjacent");
                    out.push(HomotopyMove::Triangle { pos, e, f, g });
                }
            }
        }
    }
    out
}
