use num_bigint::BigInt;
use serde::Serialize;

use super::{ComplexError, FlagComplex};
use crate::snf::{smith_normal_form, IntMatrix};

/// One homology group `Z^betti ⊕ Z/t_1 ⊕ ... ⊕ Z/t_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub betti: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// Integral homology in degrees `0..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub reduced: bool,
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    pub fn degree(&self, k: usize) -> Option<&HomologyGroup> {
        self.groups.get(k)
    }

    /// Least degree with nonzero homology, if any.
    pub fn first_nonvanishing(&self) -> Option<usize> {
        self.groups.iter().position(|g| !g.is_trivial())
    }
}

/// The k-th simplicial boundary map `C_k -> C_{k-1}` as a
/// `|simplices(k-1)| x |simplices(k)|` matrix. Removing the i-th vertex of a
/// sorted tuple contributes `(-1)^i`. For `k = 0` this is the augmentation
/// `C_0 -> Z`.
pub fn boundary_matrix(complex: &FlagComplex, k: usize) -> IntMatrix {
    let cols = complex.simplices(k);
    if k == 0 {
        return IntMatrix::from_rows(&[vec![1i64; cols.len()]]);
    }
    let rows = complex.simplices(k - 1);
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (j, s) in cols.iter().enumerate() {
        for i in 0..s.len() {
            let mut face = s.clone();
            face.remove(i);
            let r = rows.binary_search(&face).expect("faces of a clique are cliques");
            m[(r, j)] = BigInt::from(if i % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

impl FlagComplex {
    /// Integral simplicial homology via Smith normal form of the boundary maps.
    /// With `reduced`, degree 0 uses the augmented chain complex.
    pub fn homology(&self, reduced: bool) -> Result<HomologyResult, ComplexError> {
        self.require_full()?;
        let dim = self.dimension();
        // boundaries[k] is the map out of degree k; index 0 is the augmentation.
        let boundaries: Vec<IntMatrix> = (0..=dim + 1).map(|k| boundary_matrix(self, k)).collect();
        for k in 1..=dim {
            let dd = boundaries[k - 1].mul(&boundaries[k]);
            assert!(dd.is_zero(), "boundary of boundary is nonzero in degree {k}");
        }
        let forms: Vec<_> = boundaries.iter().map(smith_normal_form).collect();

        let groups = (0..=dim)
            .map(|k| {
                let chains = self.simplices(k).len();
                let outgoing = if k == 0 && !reduced { 0 } else { forms[k].rank() };
                let incoming = &forms[k + 1];
                HomologyGroup { betti: chains - outgoing - incoming.rank(), torsion: incoming.torsion() }
            })
            .collect();
        Ok(HomologyResult { reduced, groups })
    }
}
