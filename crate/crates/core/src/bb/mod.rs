//! The Bestvina–Brady kernel `H` of `G -> Z` (every vertex to 1) and the
//! maps relating its directed-edge generators to vertex words.
//!
//! Words over [`Alphabet::DirectedEdges`] are words in the abstract group on
//! directed edges; `[a>b]` and `[b>a]` are distinct letters there. Identities
//! that hold only in the group, rather than letter for letter, are checked
//! through [`BbContext::phi`] and the Artin group normal form.

mod extension;
mod moves;
mod relators;

pub use extension::GPrimeElement;
pub use moves::{parse_moves, render_moves, HomotopyMove, MoveError, MoveSearch};
pub use relators::{closed_walks, cn_relator, KernelPresentation, PresentationScope};

use crate::complex::{ComplexError, FlagComplex, SpanningTree, DEFAULT_TIETZE_BUDGET};
use crate::presentations::Presentation;
use crate::words::{Alphabet, Letter, RaagContext, Word, WordError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BbError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error("vertex index {0} is not in the complex")]
    UnknownVertex(usize),
    #[error("letter {0} is not a directed edge of the complex")]
    UnknownEdge(usize),
    #[error("expected a word over {expected:?}, found {found:?}")]
    WrongAlphabet { expected: Alphabet, found: Alphabet },
    #[error("relator exponent must be nonzero")]
    ZeroExponent,
    #[error("word has exponent sum {0}, not 0")]
    NonzeroExponentSum(i64),
    #[error("{0}")]
    BadParameters(String),
    #[error("generator `{0}` is not an edge letter of the complex")]
    NotAnEdgeGenerator(String),
}

/// A connected complex with a basepoint `a` and the breadth-first tree from it.
#[derive(Clone, Debug)]
pub struct BbContext<'c> {
    complex: &'c FlagComplex,
    basepoint: usize,
    tree: SpanningTree,
    tietze_budget: usize,
}

impl<'c> BbContext<'c> {
    pub fn new(complex: &'c FlagComplex, basepoint: usize) -> Result<Self, BbError> {
        if basepoint >= complex.num_vertices() {
            return Err(BbError::UnknownVertex(basepoint));
        }
        let tree = SpanningTree::breadth_first(complex, basepoint)?;
        Ok(BbContext { complex, basepoint, tree, tietze_budget: DEFAULT_TIETZE_BUDGET })
    }

    /// Tietze budget used when deciding whether a finite presentation is complete.
    pub fn with_tietze_budget(mut self, budget: usize) -> Self {
        self.tietze_budget = budget;
        self
    }

    pub fn complex(&self) -> &'c FlagComplex {
        self.complex
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn tree(&self) -> &SpanningTree {
        &self.tree
    }

    pub fn tietze_budget(&self) -> usize {
        self.tietze_budget
    }

    pub fn raag(&self) -> RaagContext<'c> {
        RaagContext::new(self.complex)
    }

    fn check_edge_word(&self, w: &Word) -> Result<(), BbError> {
        if w.alphabet() != Alphabet::DirectedEdges {
            return Err(BbError::WrongAlphabet { expected: Alphabet::DirectedEdges, found: w.alphabet() });
        }
        match w.letters().iter().find(|l| l.gen >= self.complex.num_directed_edges()) {
            Some(l) => Err(BbError::UnknownEdge(l.gen)),
            None => Ok(()),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), BbError> {
        if v < self.complex.num_vertices() {
            Ok(())
        } else {
            Err(BbError::UnknownVertex(v))
        }
    }

    /// `e ↦ ιe (τe)^-1`, extended to words; freely reduced.
    pub fn phi(&self, w: &Word) -> Result<Word, BbError> {
        self.check_edge_word(w)?;
        let letters = w.letters().iter().flat_map(|l| {
            let e = self.complex.directed_edge(l.gen);
            if l.inverse {
                [Letter::pos(e.terminal), Letter::neg(e.initial)]
            } else {
                [Letter::pos(e.initial), Letter::neg(e.terminal)]
            }
        });
        Ok(Word::new(Alphabet::Vertices, letters.collect::<Vec<_>>()))
    }

    /// `p(a, b)`: the directed edges along the tree path from `a` to `b`.
    pub fn path_element(&self, a: usize, b: usize) -> Result<Word, BbError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let vs = self.tree.vertex_path(a, b);
        let letters: Vec<Letter> = vs
            .windows(2)
            .map(|p| Letter::pos(self.complex.require_directed_edge(p[0], p[1]).expect("tree edges are edges")))
            .collect();
        Ok(Word::new(Alphabet::DirectedEdges, letters))
    }

    /// `ψ_a(e) = p(a, ιe) e p(ιe, a)` on each positive letter; inverse letters
    /// map to the inverse image.
    pub fn psi(&self, w: &Word) -> Result<Word, BbError> {
        self.check_edge_word(w)?;
        let a = self.basepoint;
        let mut letters = Vec::new();
        for l in w.letters() {
            let iota = self.complex.directed_edge(l.gen).initial;
            let image = Word::product(
                Alphabet::DirectedEdges,
                [
                    &self.path_element(a, iota)?,
                    &Word::generator(Alphabet::DirectedEdges, l.gen),
                    &self.path_element(iota, a)?,
                ],
            )?;
            let image = if l.inverse { image.inverse() } else { image };
            letters.extend_from_slice(image.letters());
        }
        Ok(Word::new(Alphabet::DirectedEdges, letters))
    }

    /// The inverse automorphism `ξ ψ_a ξ`.
    pub fn psi_inverse(&self, w: &Word) -> Result<Word, BbError> {
        Ok(xi(&self.psi(&xi(w))?))
    }

    /// `ψ_a^j`, using [`Self::psi_inverse`] for negative `j`.
    pub fn psi_power(&self, w: &Word, j: i64) -> Result<Word, BbError> {
        let mut out = w.clone();
        for _ in 0..j.unsigned_abs() {
            out = if j > 0 { self.psi(&out)? } else { self.psi_inverse(&out)? };
        }
        Ok(out)
    }

    /// Whether the φ-image of an edge word is trivial in the Artin group.
    pub fn verify_relator(&self, w: &Word) -> Result<bool, BbError> {
        Ok(self.raag().is_identity(&self.phi(w)?)?)
    }

    /// Checks every relator of a presentation whose generators are edge
    /// letters `[a>b]` of this complex.
    pub fn verify_presentation(&self, p: &Presentation) -> Result<Vec<bool>, BbError> {
        let map = p
            .generators()
            .iter()
            .map(|g| self.complex.parse_edge_label(g).map_err(|_| BbError::NotAnEdgeGenerator(g.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        p.relators()
            .iter()
            .map(|r| {
                let w = Word::new(
                    Alphabet::DirectedEdges,
                    r.letters().iter().map(|l| Letter { gen: map[l.gen], inverse: l.inverse }).collect::<Vec<_>>(),
                );
                self.verify_relator(&w)
            })
            .collect()
    }

    /// An edge word whose φ-image equals the given zero-exponent-sum vertex word.
    ///
    /// With the word written as syllables `a_1^n_1 ... a_m^n_m`, the last
    /// syllable is absorbed into the previous one by the tree path from
    /// `a_{m-1}` to `a_m`, each edge raised to the carried exponent; adjacent
    /// vertices commute, so each edge power maps to `ι^k τ^-k`.
    pub fn express_in_kernel(&self, w: &Word) -> Result<Word, BbError> {
        if w.alphabet() != Alphabet::Vertices {
            return Err(BbError::WrongAlphabet { expected: Alphabet::Vertices, found: w.alphabet() });
        }
        if let Some(l) = w.letters().iter().find(|l| l.gen >= self.complex.num_vertices()) {
            return Err(BbError::UnknownVertex(l.gen));
        }
        let sum = w.exponent_sum();
        if sum != 0 {
            return Err(BbError::NonzeroExponentSum(sum));
        }
        let syl = w.syllables();
        let mut tails: Vec<Vec<Letter>> = Vec::new();
        let mut carry = 0i64;
        for i in (1..syl.len()).rev() {
            let exp = syl[i].1 + carry;
            let (prev, cur) = (syl[i - 1].0, syl[i].0);
            let mut tail = Vec::new();
            for pair in self.tree.vertex_path(prev, cur).windows(2) {
                let e = self.complex.require_directed_edge(pair[0], pair[1]).expect("tree edges are edges");
                let l = if exp > 0 { Letter::neg(e) } else { Letter::pos(e) };
                tail.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
            }
            tails.push(tail);
            carry = exp;
        }
        Ok(Word::new(Alphabet::DirectedEdges, tails.into_iter().rev().flatten().collect::<Vec<_>>()))
    }
}

/// `ξ`: flips the sign of every letter in place (order is kept).
pub fn xi(w: &Word) -> Word {
    Word::new(w.alphabet(), w.letters().iter().map(|l| l.inv()).collect::<Vec<_>>())
}
