//! Finite group presentations: abelianization, bounded Tietze
//! simplification and the `gens:`/`rel:` file format.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::snf::{smith_normal_form, IntMatrix};
use crate::syntax::{self, ParseError};
use crate::words::{Alphabet, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("generator `{0}` is declared twice")]
    DuplicateGenerator(String),
    #[error("`{0}` is not a valid generator name")]
    BadGenerator(String),
    #[error("relator {0} is empty")]
    EmptyRelator(usize),
    #[error("relator {0} uses a generator outside the alphabet")]
    UnknownGenerator(usize),
    #[error("relator {0} is not written over the presentation's symbols")]
    WrongAlphabet(usize),
    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// `<generators | relators>` with free-form provenance tags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    provenance: Vec<String>,
}

fn valid_generator_name(s: &str) -> bool {
    syntax::is_identifier(s) || syntax::edge_letter_parts(s).is_some()
}

impl Presentation {
    /// Relators must be nonempty words over [`Alphabet::Symbols`] indexing `generators`.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let mut seen = HashMap::new();
        for g in &generators {
            if !valid_generator_name(g) {
                return Err(PresentationError::BadGenerator(g.clone()));
            }
            if seen.insert(g.as_str(), ()).is_some() {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        for (i, r) in relators.iter().enumerate() {
            if r.alphabet() != Alphabet::Symbols {
                return Err(PresentationError::WrongAlphabet(i));
            }
            if r.is_empty() {
                return Err(PresentationError::EmptyRelator(i));
            }
            if r.letters().iter().any(|l| l.gen >= generators.len()) {
                return Err(PresentationError::UnknownGenerator(i));
            }
        }
        Ok(Presentation { generators, relators, provenance: Vec::new() })
    }

    pub fn with_provenance(mut self, tag: impl Into<String>) -> Self {
        self.provenance.push(tag.into());
        self
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn render_relator(&self, r: &Word) -> String {
        r.render(&self.generators)
    }

    /// Relator exponent matrix, one row per relator.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let n = self.generators.len();
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| r.exponent_vector(n)).collect();
        if rows.is_empty() {
            IntMatrix::zeros(0, n)
        } else {
            IntMatrix::from_rows(&rows)
        }
    }

    pub fn abelianization(&self) -> AbelianizationResult {
        let snf = smith_normal_form(&self.exponent_matrix());
        AbelianizationResult { rank: self.generators.len() - snf.rank(), torsion: snf.torsion() }
    }

    /// Whether an exponent vector lies in the lattice spanned by the relator
    /// rows: adding it must change neither the rank nor the product of
    /// invariant factors.
    pub fn relator_lattice_contains(&self, exponents: &[i64]) -> bool {
        assert_eq!(exponents.len(), self.generators.len());
        let base = smith_normal_form(&self.exponent_matrix());
        let mut rows: Vec<Vec<i64>> = self.relators.iter().map(|r| r.exponent_vector(self.generators.len())).collect();
        rows.push(exponents.to_vec());
        let grown = smith_normal_form(&IntMatrix::from_rows(&rows));
        let det = |fs: &[BigInt]| fs.iter().fold(BigInt::one(), |acc, d| acc * d);
        base.rank() == grown.rank() && det(&base.invariant_factors) == det(&grown.invariant_factors)
    }

    pub fn is_empty_presentation(&self) -> bool {
        self.generators.is_empty() && self.relators.is_empty()
    }

    /// Applies Tietze moves, cheapest first, until none applies or `budget`
    /// moves have been made.
    pub fn tietze_simplify(&self, budget: usize) -> TietzeOutcome {
        let mut state = TietzeState { generators: self.generators.clone(), relators: self.relators.clone() };
        let mut moves = 0;
        let status = loop {
            let Some(mv) = state.next_move() else { break TietzeStatus::Fixpoint };
            if moves == budget {
                break TietzeStatus::BudgetExhausted;
            }
            state.apply(mv);
            moves += 1;
        };
        state.relators.retain(|r| !r.is_empty());
        let mut provenance = self.provenance.clone();
        provenance.push(format!("tietze: {moves} moves, {}", status.as_str()));
        let presentation = Presentation { generators: state.generators, relators: state.relators, provenance };
        TietzeOutcome { presentation, status, moves }
    }

    /// Text form: provenance comments, a `gens:` line and one `rel:` line per relator.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        for p in &self.provenance {
            s.push_str(PROVENANCE_PREFIX);
            s.push_str(p);
            s.push('\n');
        }
        s.push_str("gens:");
        for g in &self.generators {
            s.push(' ');
            s.push_str(g);
        }
        s.push('\n');
        for r in &self.relators {
            s.push_str("rel: ");
            s.push_str(&self.render_relator(r));
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        if text.trim_start().starts_with('{') {
            return Presentation::from_json(text);
        }
        let mut provenance = Vec::new();
        let mut generators: Option<Vec<String>> = None;
        let mut relators = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line_no = ln + 1;
            if let Some(tag) = raw.trim_start().strip_prefix(PROVENANCE_PREFIX) {
                provenance.push(tag.trim_end().to_string());
                continue;
            }
            let line = syntax::strip_comment(raw);
            if line.trim().is_empty() {
                continue;
            }
            if let Some((rest, off)) = syntax::keyed(line, "gens") {
                if generators.is_some() {
                    return Err(ParseError::new(line_no, 1, "second `gens:` line").into());
                }
                let mut gens = Vec::new();
                for tok in syntax::tokens(rest, off) {
                    if !valid_generator_name(tok.text) {
                        return Err(
                            ParseError::new(line_no, tok.column, format!("bad generator name `{}`", tok.text)).into()
                        );
                    }
                    if gens.iter().any(|g| g == tok.text) {
                        return Err(ParseError::new(
                            line_no,
                            tok.column,
                            format!("generator `{}` declared twice", tok.text),
                        )
                        .into());
                    }
                    gens.push(tok.text.to_string());
                }
                generators = Some(gens);
            } else if let Some((rest, off)) = syntax::keyed(line, "rel") {
                let Some(gens) = &generators else {
                    return Err(ParseError::new(line_no, 1, "`rel:` before `gens:`").into());
                };
                let w = Word::parse(Alphabet::Symbols, rest, line_no, off, |s| gens.iter().position(|g| g == s))?;
                if w.is_empty() {
                    return Err(ParseError::new(line_no, off + 1, "relator is empty after free reduction").into());
                }
                relators.push(w);
            } else {
                let col = line.len() - line.trim_start().len() + 1;
                return Err(ParseError::new(line_no, col, "expected `gens:` or `rel:`").into());
            }
        }
        let generators = generators.ok_or_else(|| ParseError::new(1, 1, "missing `gens:` line"))?;
        let mut p = Presentation::new(generators, relators)?;
        p.provenance = provenance;
        Ok(p)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(JsonPresentation {
            gens: self.generators.clone(),
            rel: self.relators.iter().map(|r| self.render_relator(r)).collect(),
            provenance: self.provenance.clone(),
        })
        .expect("presentation serializes")
    }

    /// JSON mirror `{"gens": [...], "rel": ["word", ...], "provenance": [...]}`.
    pub fn from_json(text: &str) -> Result<Self, PresentationError> {
        let j: JsonPresentation =
            serde_json::from_str(text).map_err(|e| ParseError::new(e.line(), e.column(), e.to_string()))?;
        let mut relators = Vec::with_capacity(j.rel.len());
        for (i, r) in j.rel.iter().enumerate() {
            let w = Word::parse(Alphabet::Symbols, r, 1, 0, |s| j.gens.iter().position(|g| g == s))
                .map_err(|e| ParseError::new(e.line, e.column, format!("relator {i}: {}", e.message)))?;
            relators.push(w);
        }
        let mut p = Presentation::new(j.gens, relators)?;
        p.provenance = j.provenance;
        Ok(p)
    }
}

const PROVENANCE_PREFIX: &str = "# provenance: ";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonPresentation {
    gens: Vec<String>,
    rel: Vec<String>,
    #[serde(default)]
    provenance: Vec<String>,
}

/// Rank and torsion of the abelianized group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizationResult {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianizationResult {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TietzeStatus {
    Fixpoint,
    BudgetExhausted,
}

impl TietzeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            TietzeStatus::Fixpoint => "fixpoint",
            TietzeStatus::BudgetExhausted => "budget exhausted",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TietzeOutcome {
    pub presentation: Presentation,
    pub status: TietzeStatus,
    pub moves: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Move {
    Reduce(usize),
    Delete(usize),
    /// Relator index, generator, and the generator's position in the relator.
    Eliminate {
        relator: usize,
        gen: usize,
        at: usize,
    },
    /// Replace `target` by a shorter word using `source`.
    Shorten {
        target: usize,
        replacement: Word,
    },
}

struct TietzeState {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl TietzeState {
    fn next_move(&self) -> Option<Move> {
        if let Some(i) = self.relators.iter().position(|r| !r.is_cyclically_reduced()) {
            return Some(Move::Reduce(i));
        }
        if let Some(i) = self.relators.iter().position(Word::is_empty) {
            return Some(Move::Delete(i));
        }
        for i in 1..self.relators.len() {
            if (0..i).any(|j| same_up_to_conjugacy_and_inverse(&self.relators[i], &self.relators[j])) {
                return Some(Move::Delete(i));
            }
        }
        for gen in 0..self.generators.len() {
            let hit = self
                .relators
                .iter()
                .enumerate()
                .filter_map(|(i, r)| {
                    let mut at = r.letters().iter().enumerate().filter(|(_, l)| l.gen == gen).map(|(k, _)| k);
                    match (at.next(), at.next()) {
                        (Some(k), None) => Some((r.len(), i, k)),
                        _ => None,
                    }
                })
                .min();
            if let Some((_, relator, at)) = hit {
                return Some(Move::Eliminate { relator, gen, at });
            }
        }
        for target in 0..self.relators.len() {
            for source in 0..self.relators.len() {
                if source != target {
                    if let Some(replacement) = shorten(&self.relators[target], &self.relators[source]) {
                        return Some(Move::Shorten { target, replacement });
                    }
                }
            }
        }
        None
    }

    fn apply(&mut self, mv: Move) {
        match mv {
            Move::Reduce(i) => self.relators[i] = self.relators[i].cyclically_reduced(),
            Move::Delete(i) => {
                self.relators.remove(i);
            }
            Move::Eliminate { relator, gen, at } => {
                // r = u x^s v  =>  x = (v u)^(-s)
                let r = self.relators.remove(relator);
                let letters = r.letters();
                let x = letters[at];
                let rest: Vec<Letter> = letters[at + 1..].iter().chain(&letters[..at]).copied().collect();
                let mut value = Word::new(Alphabet::Symbols, rest);
                if !x.inverse {
                    value = value.inverse();
                }
                let value_inv = value.inverse();
                for w in &mut self.relators {
                    let substituted = w.letters().iter().flat_map(|l| {
                        if l.gen == gen {
                            let v = if l.inverse { &value_inv } else { &value };
                            v.letters().to_vec()
                        } else {
                            vec![*l]
                        }
                    });
                    let renumbered = substituted.map(|l| if l.gen > gen { Letter { gen: l.gen - 1, ..l } } else { l });
                    *w = Word::new(Alphabet::Symbols, renumbered.collect::<Vec<_>>());
                }
                self.generators.remove(gen);
            }
            Move::Shorten { target, replacement } => self.relators[target] = replacement,
        }
    }
}

fn cyclic_conjugates(w: &Word) -> impl Iterator<Item = Vec<Letter>> + '_ {
    let l = w.letters();
    (0..l.len()).map(move |k| l[k..].iter().chain(&l[..k]).copied().collect())
}

fn same_up_to_conjugacy_and_inverse(a: &Word, b: &Word) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let inv = b.inverse();
    let found = cyclic_conjugates(b).chain(cyclic_conjugates(&inv)).any(|c| c == a.letters());
    found
}

/// If a cyclic conjugate of `target` contains more than half of a cyclic
/// conjugate `p q` of `source` or its inverse as a prefix `p`, replacing `p`
/// by `q^-1` shortens it.
fn shorten(target: &Word, source: &Word) -> Option<Word> {
    let n = source.len();
    if n == 0 || target.len() <= n / 2 {
        return None;
    }
    let inv = source.inverse();
    let sources: Vec<Vec<Letter>> = cyclic_conjugates(source).chain(cyclic_conjugates(&inv)).collect();
    for t in cyclic_conjugates(target) {
        for s in &sources {
            let common = t.iter().zip(s).take_while(|(a, b)| a == b).count();
            let k = common.min(t.len());
            if 2 * k > n {
                // t = p rest, s = p q, p = q^-1 in the group
                let q_inv = s[k..].iter().rev().map(|l| l.inv());
                let letters: Vec<Letter> = q_inv.chain(t[k..].iter().copied()).collect();
                return Some(Word::new(Alphabet::Symbols, letters).cyclically_reduced());
            }
        }
    }
    None
}
