//! Pairings, perfect matchings and Hamiltonian cycles on graph prisms.
//!
//! A pairing of a graph `G` is a perfect matching of the complete graph on
//! `V(G)`. `G` is Pairing-Hamiltonian (PH) when every pairing `M` can be
//! completed by a perfect matching `N` of `G` so that `M ∪ N` is a
//! Hamiltonian cycle.
//!
//! * [`graph`]: graphs, generators, products, prism towers, graph6, DOT,
//!   isomorphism and small census enumeration.
//! * [`matching`]: pairings, cycle decompositions, brute-force extension
//!   search and exhaustive PH verification.
//! * [`extension`]: the recursive construction that extends any pairing of
//!   `P^k(G)` given extensions for `G`.
//! * [`tree`]: minimum leaf spanning trees and the prism-power parameters
//!   derived from them.
//! * [`cli`]: the `pairing-prism` command line.

pub mod cli;
pub mod config;
pub mod extension;
pub mod graph;
pub mod matching;
pub mod tree;

pub use graph::{Graph, GraphError};
pub use matching::{Pairing, PerfectMatching};
