//! The extension `G'` of the edge group by an infinite cyclic group generated
//! by `a'`, acting by `a' h a'^-1 = ψ_a(h)`.

use super::{BbContext, BbError};
use crate::words::{Alphabet, Word};

/// `h a'^k` in the extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPrimeElement {
    pub h: Word,
    pub k: i64,
}

impl GPrimeElement {
    pub fn identity() -> Self {
        GPrimeElement { h: Word::empty(Alphabet::DirectedEdges), k: 0 }
    }

    /// `a'` itself.
    pub fn generator() -> Self {
        GPrimeElement { h: Word::empty(Alphabet::DirectedEdges), k: 1 }
    }

    pub fn from_edge_word(h: Word) -> Self {
        GPrimeElement { h, k: 0 }
    }
}

impl BbContext<'_> {
    /// `θ(b) = p(b, a) a'`.
    pub fn theta(&self, b: usize) -> Result<GPrimeElement, BbError> {
        Ok(GPrimeElement { h: self.path_element(b, self.basepoint())?, k: 1 })
    }

    /// `(h, j)(h', k) = (h ψ_a^j(h'), j + k)`.
    pub fn gprime_multiply(&self, x: &GPrimeElement, y: &GPrimeElement) -> Result<GPrimeElement, BbError> {
        let twisted = self.psi_power(&y.h, x.k)?;
        Ok(GPrimeElement { h: x.h.concat(&twisted)?, k: x.k + y.k })
    }

    /// `(h, k)^-1 = (ψ_a^-k(h^-1), -k)`.
    pub fn gprime_inverse(&self, x: &GPrimeElement) -> Result<GPrimeElement, BbError> {
        Ok(GPrimeElement { h: self.psi_power(&x.h.inverse(), -x.k)?, k: -x.k })
    }

    /// `φ̃(h, k) = φ(h) a^k`, a vertex word.
    pub fn phi_tilde(&self, x: &GPrimeElement) -> Result<Word, BbError> {
        let a = Word::power_of(Alphabet::Vertices, self.basepoint(), x.k);
        Ok(self.phi(&x.h)?.concat(&a)?)
    }
}
