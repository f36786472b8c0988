//! The exterior face ring: the exterior algebra on the vertices modulo the
//! monomials supported on non-faces. Its degree-i rank is the number of
//! (i-1)-simplices, matching the integral cohomology ranks of the Artin group.
//!
//! The finiteness report combines the Bestvina–Brady classification with the
//! Euler characteristic obstruction for the kernel.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::complex::{ComplexError, FlagComplex, SimplyConnectedStatus};

/// `coefficient · v_1 ∧ ... ∧ v_k` with `v_1 < ... < v_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FaceMonomial {
    vertices: Vec<usize>,
    coefficient: i64,
}

impl FaceMonomial {
    /// Sorts `vertices`, tracking the sign of the sorting permutation. Repeated
    /// vertices or a non-face give zero.
    pub fn new(complex: &FlagComplex, vertices: &[usize], coefficient: i64) -> Self {
        let mut vs = vertices.to_vec();
        let mut sign = 1;
        for i in 1..vs.len() {
            let mut j = i;
            while j > 0 && vs[j - 1] > vs[j] {
                vs.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if vs.windows(2).any(|w| w[0] == w[1]) || !complex.spans_simplex(&vs) {
            return FaceMonomial::zero();
        }
        FaceMonomial { vertices: vs, coefficient: sign * coefficient }.normalized()
    }

    pub fn zero() -> Self {
        FaceMonomial { vertices: Vec::new(), coefficient: 0 }
    }

    pub fn one() -> Self {
        FaceMonomial { vertices: Vec::new(), coefficient: 1 }
    }

    fn normalized(self) -> Self {
        if self.coefficient == 0 {
            FaceMonomial::zero()
        } else {
            self
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient == 0
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn coefficient(&self) -> i64 {
        self.coefficient
    }

    pub fn degree(&self) -> usize {
        self.vertices.len()
    }
}

/// Product in the face ring: zero if the supports meet or their union is not
/// a simplex, otherwise the merged tuple signed by the merge permutation.
pub fn monomial_product(m1: &FaceMonomial, m2: &FaceMonomial, complex: &FlagComplex) -> FaceMonomial {
    if m1.is_zero() || m2.is_zero() {
        return FaceMonomial::zero();
    }
    let (a, b) = (&m1.vertices, &m2.vertices);
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            merged.push(a[i]);
            i += 1;
        } else if i < a.len() && a[i] == b[j] {
            return FaceMonomial::zero();
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += a.len() - i;
            merged.push(b[j]);
            j += 1;
        }
    }
    if !complex.spans_simplex(&merged) {
        return FaceMonomial::zero();
    }
    let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
    FaceMonomial { vertices: merged, coefficient: sign * m1.coefficient * m2.coefficient }.normalized()
}

/// A finite integral combination of face monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceRingElement {
    terms: BTreeMap<Vec<usize>, i64>,
}

impl FaceRingElement {
    pub fn zero() -> Self {
        FaceRingElement::default()
    }

    pub fn from_monomial(m: &FaceMonomial) -> Self {
        let mut e = FaceRingElement::zero();
        e.add_monomial(m);
        e
    }

    fn add_monomial(&mut self, m: &FaceMonomial) {
        if m.is_zero() {
            return;
        }
        let c = self.terms.entry(m.vertices.clone()).or_insert(0);
        *c += m.coefficient;
        if *c == 0 {
            self.terms.remove(&m.vertices);
        }
    }

    pub fn add(&self, other: &FaceRingElement) -> FaceRingElement {
        let mut out = self.clone();
        for (vs, &c) in &other.terms {
            out.add_monomial(&FaceMonomial { vertices: vs.clone(), coefficient: c });
        }
        out
    }

    pub fn mul(&self, other: &FaceRingElement, complex: &FlagComplex) -> FaceRingElement {
        let mut out = FaceRingElement::zero();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let m = monomial_product(
                    &FaceMonomial { vertices: a.clone(), coefficient: ca },
                    &FaceMonomial { vertices: b.clone(), coefficient: cb },
                    complex,
                );
                out.add_monomial(&m);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = FaceMonomial> + '_ {
        self.terms.iter().map(|(vs, &c)| FaceMonomial { vertices: vs.clone(), coefficient: c })
    }
}

/// Ranks `(1, f_0, f_1, ...)` of the graded pieces of the face ring.
pub fn hilbert_series(complex: &FlagComplex) -> Result<Vec<usize>, ComplexError> {
    complex.require_full()?;
    Ok(std::iter::once(1).chain(complex.f_vector()).collect())
}

/// Euler characteristic of the Artin group, `1 - χ(Δ)`.
pub fn group_euler_characteristic(complex: &FlagComplex) -> Result<i64, ComplexError> {
    Ok(1 - complex.euler_characteristic()?)
}

/// Finite presentability of the kernel: never a bare boolean when unsure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

/// Largest `n` for which the kernel has type FP(n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum FpLevel {
    Finite(usize),
    /// Type FP(n) for all n, hence type FP (the Artin group has finite cohomological dimension).
    #[serde(serialize_with = "serialize_infinity")]
    All,
}

fn serialize_infinity<S: serde::Serializer>(s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str("infinity")
}

impl FpLevel {
    /// Whether FP(k) holds.
    pub fn has_fp(&self, k: usize) -> bool {
        match self {
            FpLevel::Finite(n) => k <= *n,
            FpLevel::All => true,
        }
    }
}

impl fmt::Display for FpLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FpLevel::Finite(n) => write!(f, "FP({n}), not FP({})", n + 1),
            FpLevel::All => write!(f, "FP"),
        }
    }
}

/// Finiteness properties of the kernel of `G -> Z`, each with its justification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinitenessReport {
    pub finitely_generated: bool,
    pub finitely_presented: TriState,
    pub fp_level: FpLevel,
    pub chi_delta: i64,
    pub chi_group: i64,
    /// χ(Δ) ≠ 1, so the kernel's rational cohomology is infinite dimensional.
    pub corollary6_obstruction: bool,
    /// Simply connected (certified) with χ(Δ) ≠ 1: finitely presented but not of type FP.
    pub corollary7_applies: bool,
    pub reasons: Vec<String>,
}

impl FinitenessReport {
    pub fn new(complex: &FlagComplex, tietze_budget: usize) -> Result<Self, ComplexError> {
        let chi_delta = complex.euler_characteristic()?;
        let chi_group = 1 - chi_delta;
        let connected = complex.is_connected();
        let finitely_presented = if !connected {
            TriState::No
        } else {
            match complex.simply_connected_status(tietze_budget)? {
                SimplyConnectedStatus::CertifiedTrivial => TriState::Yes,
                SimplyConnectedStatus::CertifiedNontrivial => TriState::No,
                SimplyConnectedStatus::Unknown => TriState::Unknown,
            }
        };
        let reduced = complex.homology(true)?;
        let fp_level = match reduced.first_nonvanishing() {
            Some(k) => FpLevel::Finite(k),
            None => FpLevel::All,
        };
        let corollary6_obstruction = chi_delta != 1;
        let corollary7_applies = finitely_presented == TriState::Yes && chi_delta != 1;

        let mut reasons = vec![
            format!(
                "finitely generated iff the complex is connected (Bestvina-Brady): {}",
                if connected { "connected" } else { "disconnected" }
            ),
            format!(
                "finitely presented iff the complex is connected and simply connected (Bestvina-Brady): {}",
                match finitely_presented {
                    TriState::Yes => "pi_1 certified trivial by Tietze simplification",
                    TriState::No if !connected => "disconnected",
                    TriState::No => "H_1 is nonzero",
                    TriState::Unknown => "pi_1 neither certified trivial nor nontrivial within budget",
                }
            ),
            match fp_level {
                FpLevel::Finite(k) => format!(
                    "type FP(n) iff the complex is (n-1)-acyclic (Bestvina-Brady): first nonzero reduced homology in degree {k}"
                ),
                FpLevel::All => {
                    "type FP(n) iff the complex is (n-1)-acyclic (Bestvina-Brady): the complex is acyclic".to_string()
                }
            },
            format!(
                "Euler characteristic of the Artin group is 1 - chi(complex) (Droms): {chi_group}; \
                 finite dimensional rational cohomology of the kernel requires chi = 1"
            ),
        ];
        if corollary7_applies {
            reasons.push("simply connected with chi != 1: finitely presented but not of type FP".to_string());
        }
        Ok(FinitenessReport {
            finitely_generated: connected,
            finitely_presented,
            fp_level,
            chi_delta,
            chi_group,
            corollary6_obstruction,
            corollary7_applies,
            reasons,
        })
    }

    /// Human-readable rendering; the JSON form carries the same fields.
    pub fn render_text(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let fp = match self.finitely_presented {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unknown => "unknown",
        };
        let mut s = String::new();
        s.push_str(&format!("finitely_generated: {}\n", yn(self.finitely_generated)));
        s.push_str(&format!("finitely_presented: {fp}\n"));
        s.push_str(&format!("fp_level: {}\n", self.fp_level));
        s.push_str(&format!("chi_delta: {}\n", self.chi_delta));
        s.push_str(&format!("chi_group: {}\n", self.chi_group));
        s.push_str(&format!(
            "corollary6_obstruction: {}{}\n",
            yn(self.corollary6_obstruction),
            if self.corollary6_obstruction {
                " (rational cohomology of the kernel is infinite dimensional)"
            } else {
                ""
            }
        ));
        s.push_str(&format!(
            "corollary7_applies: {}{}\n",
            yn(self.corollary7_applies),
            if self.corollary7_applies { " (finitely presented but not of type FP)" } else { "" }
        ));
        for r in &self.reasons {
            s.push_str(&format!("reason: {r}\n"));
        }
        s
    }
}
