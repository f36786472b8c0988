//! Right-angled Artin groups of flag complexes and presentations of their
//! Bestvina–Brady kernels.
//!
//! * [`complex`]: flag complexes, homology, edge-path groups.
//! * [`words`]: free reduction and the Artin group normal form.
//! * [`presentations`]: abelianization, Tietze moves, file format.
//! * [`bb`]: kernel presentations and the maps between edge and vertex words.
//! * [`facering`]: the exterior face ring and the finiteness report.

pub mod bb;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod facering;
pub mod presentations;
pub mod snf;
pub mod syntax;
pub mod words;

pub use complex::{DirectedCycle, DirectedEdge, FlagComplex};
pub use presentations::Presentation;
pub use words::{Alphabet, Letter, RaagContext, Word};
