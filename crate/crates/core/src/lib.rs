//! Signed degree sets and signed degree sequences.
//!
//! * [`realize`] builds a connected signed bipartite graph with any
//!   prescribed nonempty set of integers as its signed degree set.
//! * [`sgraphical`] decides whether a sequence is the signed degree
//!   sequence of a signed graph.
//! * [`bipartite_seq`] does the same for pairs of sequences on the two parts
//!   of a signed bipartite graph, and provides the Gale-Ryser test.
//! * [`oracle`] enumerates all small signed graphs for ground truth.
//! * [`io`] and [`cli`] handle the `sbg` text format, DOT export and the
//!   `sdset` command line.

pub mod bipartite_seq;
pub mod cli;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod realize;
pub mod sgraphical;

pub use error::{Error, Result};
pub use graph::{DegreeSet, Sign, SignedBipartiteGraph, SignedDegrees, SignedGraph, Vertex};
pub use realize::{realize_set, RealizationCase, RealizationReport};
