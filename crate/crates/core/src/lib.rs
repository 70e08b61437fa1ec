//! Desk-scale laboratory for Ramsey numbers of the form R(K_{2,n}, W_m).
//!
//! The crate provides four layers, bottom up:
//!
//! * [`graph`] / [`graph6`]: an immutable bit-matrix graph type with the
//!   structural primitives the rest of the crate leans on (bipartiteness
//!   certificates, vertex connectivity, biconnected components) and the
//!   graph6 interchange format.
//! * [`patterns`]: the pattern family grammar (`star:n`, `k2n:n`, `book:n`,
//!   `cycle:m`, `wheel:m`, `clique:k`), realizations, joins, clique unions,
//!   complete multipartite constructions, and the chromatic-surplus lower
//!   bound calculator.
//! * [`detect`]: exact containment decision procedures for every pattern,
//!   each returning a re-checkable witness, plus cycle spectra.
//! * [`lemmas`] / [`search`]: checkers that test the individual structural
//!   lemmas behind R(K_{2,n}, W_m) = 3n+4 on concrete graphs, and the
//!   isomorph-free exhaustive search that pins exact small Ramsey numbers.

pub mod detect;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod lemmas;
pub mod patterns;
pub mod ratio;
pub mod search;
pub mod structure;

pub use error::CheckError;
pub use graph::{Graph, VertexSet};
pub use patterns::PatternSpec;
pub use ratio::Ratio;
