//! Certified graph algorithms for experiments on polynomial χ-boundedness.
//!
//! Every constructive procedure returns an explicit vertex-level witness, and
//! every witness type has an independent verifier in [`structures`] or
//! [`patterns`] that recomputes all chromatic and clique numbers itself.
//!
//! * [`graph`]: immutable graphs, vertex sets, combinators, graph6/DIMACS.
//! * [`invariants`]: exact ω, χ and stable sets with witnesses, plus caches.
//! * [`polynomial`]: big-integer polynomials and the horn-sweep recurrences.
//! * [`patterns`]: paths, brooms, 2P4 and cone/union recipes; induced search.
//! * [`structures`]: definition-level verifiers for scatterings, horns, splits.
//! * [`lemmas`]: witness-producing constructions built on the verifiers.
//! * [`harness`]: generators, exhaustive and random campaigns, CSV and SVG.

pub mod error;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod lemmas;
pub mod patterns;
pub mod polynomial;
pub mod structures;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use polynomial::Polynomial;
