//! Free-group words, the right-angled Artin group normal form and the
//! exponent-sum homomorphism.

use std::fmt;

use crate::complex::FlagComplex;
use crate::syntax::{self, FactorDisplay, ParseError};

/// Which generating set a word is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    /// Vertices of a complex: generators of the Artin group.
    Vertices,
    /// Directed edges of a complex, by directed-edge id.
    DirectedEdges,
    /// Generators of an abstract presentation, by position.
    Symbols,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("cannot combine a word over {0:?} with one over {1:?}")]
    AlphabetMismatch(Alphabet, Alphabet),
    #[error("generator {0} is not in the alphabet")]
    UnknownGenerator(usize),
    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// A generator or its inverse. Letters order by generator, then positive
/// before inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A freely reduced word over a tagged alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    /// Freely reduces `letters`.
    pub fn new(alphabet: Alphabet, letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last().is_some_and(|&p| p.cancels(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { alphabet, letters: out }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word { alphabet, letters: Vec::new() }
    }

    pub fn generator(alphabet: Alphabet, gen: usize) -> Self {
        Word { alphabet, letters: vec![Letter::pos(gen)] }
    }

    /// `gen^exp`.
    pub fn power_of(alphabet: Alphabet, gen: usize, exp: i64) -> Self {
        let l = if exp < 0 { Letter::neg(gen) } else { Letter::pos(gen) };
        Word { alphabet, letters: vec![l; exp.unsigned_abs() as usize] }
    }

    /// Builds a word from `(generator, exponent)` pairs.
    pub fn from_powers(alphabet: Alphabet, powers: &[(usize, i64)]) -> Self {
        Word::new(
            alphabet,
            powers.iter().flat_map(|&(g, k)| {
                let l = if k < 0 { Letter::neg(g) } else { Letter::pos(g) };
                std::iter::repeat_n(l, k.unsigned_abs() as usize)
            }),
        )
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { alphabet: self.alphabet, letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    /// Product `self * other`, freely reduced.
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.alphabet != other.alphabet {
            return Err(WordError::AlphabetMismatch(self.alphabet, other.alphabet));
        }
        Ok(Word::new(self.alphabet, self.letters.iter().chain(&other.letters).copied()))
    }

    /// Product of several words over one alphabet.
    pub fn product<'a>(alphabet: Alphabet, words: impl IntoIterator<Item = &'a Word>) -> Result<Word, WordError> {
        let mut letters = Vec::new();
        for w in words {
            if w.alphabet != alphabet {
                return Err(WordError::AlphabetMismatch(alphabet, w.alphabet));
            }
            letters.extend_from_slice(&w.letters);
        }
        Ok(Word::new(alphabet, letters))
    }

    /// `self^k`.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        Word::new(self.alphabet, std::iter::repeat_n(&base.letters, k.unsigned_abs() as usize).flatten().copied())
    }

    /// Sum of the signs of the letters.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    /// Exponent of each generator `0..n`.
    pub fn exponent_vector(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        for l in &self.letters {
            v[l.gen] += l.sign();
        }
        v
    }

    /// Whether no cyclic conjugate admits a free cancellation.
    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&a), Some(&b)) if self.letters.len() > 1 => !a.cancels(b),
            _ => true,
        }
    }

    /// Strips inverse pairs from the two ends.
    pub fn cyclically_reduced(&self) -> Word {
        let mut lo = 0;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo].cancels(self.letters[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        Word { alphabet: self.alphabet, letters: self.letters[lo..hi].to_vec() }
    }

    /// Maximal runs as `(generator, exponent)`.
    pub fn syllables(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some((g, k)) if *g == l.gen && (*k < 0) == l.inverse => *k += l.sign(),
                _ => out.push((l.gen, l.sign())),
            }
        }
        out
    }

    /// Renders with `names[g]` for generator `g`, collapsing runs to powers.
    pub fn render<S: AsRef<str>>(&self, names: &[S]) -> String {
        self.render_with(|g| names[g].as_ref().to_string())
    }

    pub fn render_with(&self, mut name: impl FnMut(usize) -> String) -> String {
        let parts: Vec<String> =
            self.syllables().into_iter().map(|(g, k)| FactorDisplay(&name(g), k).to_string()).collect();
        parts.join(" ")
    }

    /// Parses factors `g`, `g^-1`, `g^k`, resolving names with `resolve`.
    pub fn parse(
        alphabet: Alphabet,
        text: &str,
        line: usize,
        offset: usize,
        mut resolve: impl FnMut(&str) -> Option<usize>,
    ) -> Result<Word, ParseError> {
        let factors = syntax::parse_factors(text, line, offset)?;
        let mut powers = Vec::with_capacity(factors.len());
        for f in factors {
            let g = resolve(f.name)
                .ok_or_else(|| ParseError::new(line, f.column, format!("unknown generator `{}`", f.name)))?;
            powers.push((g, f.exponent));
        }
        Ok(Word::from_powers(alphabet, &powers))
    }

    /// A vertex word written with the complex's vertex names.
    pub fn parse_vertex_word(complex: &FlagComplex, text: &str) -> Result<Word, ParseError> {
        Word::parse(Alphabet::Vertices, text, 1, 0, |s| complex.vertex(s))
    }

    /// An edge word written with `[a>b]` letters.
    pub fn parse_edge_word(complex: &FlagComplex, text: &str) -> Result<Word, ParseError> {
        Word::parse(Alphabet::DirectedEdges, text, 1, 0, |s| complex.parse_edge_label(s).ok())
    }

    /// Renders a vertex or directed-edge word with the complex's names.
    pub fn display<'a>(&'a self, complex: &'a FlagComplex) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Word, &'a FlagComplex);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let s = match self.0.alphabet {
                    Alphabet::DirectedEdges => self.0.render_with(|g| self.1.edge_label(g)),
                    Alphabet::Vertices => self.0.render(self.1.vertex_names()),
                    Alphabet::Symbols => self.0.render_with(|g| format!("x{g}")),
                };
                f.write_str(&s)
            }
        }
        D(self, complex)
    }
}

/// Freely reduces a sequence of tagged letters; every letter must carry the same tag.
pub fn free_reduce(letters: &[(Alphabet, Letter)]) -> Result<Word, WordError> {
    let Some(&(alphabet, _)) = letters.first() else {
        return Ok(Word::empty(Alphabet::Symbols));
    };
    if let Some(&(other, _)) = letters.iter().find(|(a, _)| *a != alphabet) {
        return Err(WordError::AlphabetMismatch(alphabet, other));
    }
    Ok(Word::new(alphabet, letters.iter().map(|&(_, l)| l)))
}

/// The right-angled Artin group of a flag complex: vertices commute exactly
/// when they are adjacent.
#[derive(Clone, Copy, Debug)]
pub struct RaagContext<'c> {
    complex: &'c FlagComplex,
}

impl<'c> RaagContext<'c> {
    pub fn new(complex: &'c FlagComplex) -> Self {
        RaagContext { complex }
    }

    pub fn complex(&self) -> &'c FlagComplex {
        self.complex
    }

    pub fn commute(&self, g: usize, h: usize) -> bool {
        self.complex.adjacent(g, h)
    }

    fn check(&self, w: &Word) -> Result<(), WordError> {
        if w.alphabet != Alphabet::Vertices {
            return Err(WordError::AlphabetMismatch(Alphabet::Vertices, w.alphabet));
        }
        match w.letters.iter().find(|l| l.gen >= self.complex.num_vertices()) {
            Some(l) => Err(WordError::UnknownGenerator(l.gen)),
            None => Ok(()),
        }
    }

    /// Canonical representative of the group element.
    ///
    /// Letters are piled up left to right; a new letter cancels against an
    /// earlier inverse when every letter in between commutes with it. The
    /// surviving reduced word is then rearranged into the lexicographically
    /// least word reachable by swapping adjacent commuting letters.
    pub fn normal_form(&self, w: &Word) -> Result<Word, WordError> {
        self.check(w)?;
        let reduced = self.cancel(&w.letters);
        Ok(Word { alphabet: Alphabet::Vertices, letters: self.lex_least_shuffle(reduced) })
    }

    fn cancel(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
        for &x in letters {
            let mut hit = None;
            for i in (0..out.len()).rev() {
                let y = out[i];
                if y.cancels(x) {
                    hit = Some(i);
                    break;
                }
                if !self.commute(y.gen, x.gen) {
                    break;
                }
            }
            match hit {
                Some(i) => {
                    out.remove(i);
                }
                None => out.push(x),
            }
        }
        out
    }

    /// Repeatedly emits the least letter that can be moved to the front.
    fn lex_least_shuffle(&self, mut rest: Vec<Letter>) -> Vec<Letter> {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rest.len() {
                if best.is_some_and(|b| rest[b] <= rest[i]) {
                    continue;
                }
                if rest[..i].iter().all(|y| self.commute(y.gen, rest[i].gen)) {
                    best = Some(i);
                }
            }
            out.push(rest.remove(best.expect("the first letter is always movable")));
        }
        out
    }

    pub fn is_identity(&self, w: &Word) -> Result<bool, WordError> {
        Ok(self.normal_form(w)?.is_empty())
    }

    /// Whether two vertex words represent the same element.
    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool, WordError> {
        Ok(self.normal_form(u)? == self.normal_form(v)?)
    }
}
