use super::{BbContext, BbError};
use crate::complex::{DirectedCycle, FlagComplex, SimplyConnectedStatus};
use crate::presentations::Presentation;
use crate::words::{Alphabet, Letter, Word};

/// `c^[n] = e_1^n e_2^n ... e_l^n` over directed-edge letters.
pub fn cn_relator(cycle: &DirectedCycle, n: i64) -> Result<Word, BbError> {
    if n == 0 {
        return Err(BbError::ZeroExponent);
    }
    let powers: Vec<(usize, i64)> = cycle.edges().iter().map(|&e| (e, n)).collect();
    Ok(Word::from_powers(Alphabet::DirectedEdges, &powers))
}

/// Every closed directed edge-walk of length `2..=max_len`, one per rotation
/// class (the lexicographically least rotation), ordered by length and then
/// lexicographically.
pub fn closed_walks(complex: &FlagComplex, max_len: usize) -> Vec<DirectedCycle> {
    let mut out = Vec::new();
    let mut walk = Vec::with_capacity(max_len);
    // The least rotation starts with its smallest edge id, so later ids never drop below the first.
    fn extend(c: &FlagComplex, walk: &mut Vec<usize>, max_len: usize, out: &mut Vec<DirectedCycle>) {
        let first = walk[0];
        let start = c.directed_edge(first).initial;
        let here = c.directed_edge(*walk.last().expect("walk is nonempty")).terminal;
        if walk.len() >= 2 && here == start {
            let cyc = DirectedCycle::from_edges_unchecked(walk.clone());
            if cyc.is_rotation_canonical() {
                out.push(cyc);
            }
        }
        if walk.len() == max_len {
            return;
        }
        for &w in c.neighbors(here) {
            let e = c.require_directed_edge(here, w).expect("neighbours share an edge");
            if e >= first {
                walk.push(e);
                extend(c, walk, max_len, out);
                walk.pop();
            }
        }
    }
    for e in 0..complex.num_directed_edges() {
        walk.push(e);
        extend(complex, &mut walk, max_len, &mut out);
        walk.pop();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.edges().cmp(b.edges())));
    out
}

/// What a kernel presentation is known to present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresentationScope {
    /// A complete finite presentation of the kernel.
    Kernel,
    /// The group on edges with only the 2-cycle and triangle relators; it maps
    /// onto the kernel and is known to equal it only for simply connected complexes.
    EdgeTriangleGroup { status: SimplyConnectedStatus },
    /// Edge and triangle relators plus `c^[n]`, `0 < |n| <= max_exp`, for the
    /// supplied cycles: a finite truncation of an infinite relator family.
    TruncatedExtraCycles { cycles: usize, max_exp: i64 },
    /// The all-cycles relator family cut off at walk length and exponent.
    TruncatedAllCycles { max_len: usize, max_exp: i64 },
}

impl PresentationScope {
    pub fn is_complete(&self) -> bool {
        matches!(self, PresentationScope::Kernel)
    }

    pub fn describe(&self) -> String {
        match self {
            PresentationScope::Kernel => "complete presentation of the kernel H".to_string(),
            PresentationScope::EdgeTriangleGroup { status } => {
                format!("edge-triangle group K (simple connectivity {status:?}); maps onto H, not known to equal it")
            }
            PresentationScope::TruncatedExtraCycles { cycles, max_exp } => {
                format!("truncated: K plus c^[n] for {cycles} extra cycle(s), 0 < |n| <= {max_exp}")
            }
            PresentationScope::TruncatedAllCycles { max_len, max_exp } => {
                format!("truncated: all closed walks of length <= {max_len}, 0 < |n| <= {max_exp}")
            }
        }
    }
}

/// A presentation together with an explicit statement of what it presents.
#[derive(Clone, Debug)]
pub struct KernelPresentation {
    pub presentation: Presentation,
    pub scope: PresentationScope,
}

fn exponents(max_exp: i64) -> impl Iterator<Item = i64> {
    (1..=max_exp).flat_map(|n| [n, -n])
}

impl BbContext<'_> {
    /// Generators: every directed edge. Relators: `c^[n]` for every closed walk
    /// of length at most `max_len` and `0 < |n| <= max_exp`.
    pub fn relators_theorem1(&self, max_len: usize, max_exp: i64) -> Result<KernelPresentation, BbError> {
        if max_len < 2 || max_exp < 1 {
            return Err(BbError::BadParameters(format!(
                "need max_len >= 2 and max_exp >= 1, got {max_len} and {max_exp}"
            )));
        }
        let c = self.complex();
        let generators: Vec<String> = (0..c.num_directed_edges()).map(|e| c.edge_label(e)).collect();
        let mut relators = Vec::new();
        for cyc in closed_walks(c, max_len) {
            for n in exponents(max_exp) {
                let w = cn_relator(&cyc, n)?;
                relators.push(Word::new(Alphabet::Symbols, w.letters().to_vec()));
            }
        }
        let scope = PresentationScope::TruncatedAllCycles { max_len, max_exp };
        let presentation = Presentation::new(generators, relators)
            .expect("edge labels and nonempty cycle words")
            .with_provenance("construction: bb-truncated, all closed walks")
            .with_provenance(format!("truncation: max_len={max_len} max_exp={max_exp}"))
            .with_provenance(format!("scope: {}", scope.describe()));
        Ok(KernelPresentation { presentation, scope })
    }

    /// One generator per undirected edge `[u>v]` (`u` before `v`), the reverse
    /// edge being its inverse. Relators `c^[1]` and `c^[-1]` for each triangle,
    /// oriented from its least vertex towards the lesser of the other two, plus
    /// `c^[n]` for each extra cycle and `0 < |n| <= max_exp`.
    pub fn finite_presentation(
        &self,
        extra_cycles: &[DirectedCycle],
        max_exp: i64,
    ) -> Result<KernelPresentation, BbError> {
        if !extra_cycles.is_empty() && max_exp < 1 {
            return Err(BbError::BadParameters(format!("need max_exp >= 1 with extra cycles, got {max_exp}")));
        }
        let c = self.complex();
        let generators: Vec<String> = (0..c.edges().len()).map(|i| c.edge_label(2 * i)).collect();
        let mut relators = Vec::new();
        for t in c.triangles() {
            let cyc = DirectedCycle::from_vertices(c, t)?;
            for n in [1, -1] {
                relators.push(self.fold(&cn_relator(&cyc, n)?));
            }
        }
        let mut dropped = 0;
        for cyc in extra_cycles {
            for n in exponents(max_exp) {
                let w = self.fold(&cn_relator(cyc, n)?);
                if w.is_empty() {
                    dropped += 1;
                } else {
                    relators.push(w);
                }
            }
        }
        let status = c.simply_connected_status(self.tietze_budget())?;
        let scope = match (extra_cycles.is_empty(), status) {
            (true, SimplyConnectedStatus::CertifiedTrivial) => PresentationScope::Kernel,
            (true, status) => PresentationScope::EdgeTriangleGroup { status },
            (false, _) => PresentationScope::TruncatedExtraCycles { cycles: extra_cycles.len(), max_exp },
        };
        let mut presentation = Presentation::new(generators, relators)
            .expect("edge labels and nonempty folded relators")
            .with_provenance("construction: bb-finite, edges and triangles");
        for cyc in extra_cycles {
            presentation = presentation.with_provenance(format!("extra cycle: {}", cyc.display(c)));
        }
        if !extra_cycles.is_empty() {
            presentation = presentation.with_provenance(format!("truncation: max_exp={max_exp}"));
        }
        if dropped > 0 {
            presentation =
                presentation.with_provenance(format!("dropped {dropped} extra relator(s) trivial after folding"));
        }
        let presentation = presentation.with_provenance(format!("scope: {}", scope.describe()));
        Ok(KernelPresentation { presentation, scope })
    }

    /// Rewrites a directed-edge word over the undirected-edge generators of
    /// [`Self::finite_presentation`], replacing each reverse edge by an inverse.
    pub fn fold(&self, w: &Word) -> Word {
        Word::new(
            Alphabet::Symbols,
            w.letters()
                .iter()
                .map(|l| Letter { gen: l.gen / 2, inverse: l.inverse != (l.gen % 2 == 1) })
                .collect::<Vec<_>>(),
        )
    }
}
