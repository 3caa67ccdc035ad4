//! Exact solver and verification toolkit for G-free graph coloring: compute
//! the pattern-free chromatic number of a host graph, certify unique
//! colorability and vertex/edge minimality, generate the extremal
//! constructions attaining the known bounds, and machine-check those bounds
//! over streams of small graphs.
//!
//! A G-free k-coloring partitions the host's vertices into k classes none of
//! which contains a copy (a not-necessarily-induced subgraph) of the
//! forbidden pattern G; the G-free chromatic number is the least such k.
//! Taking G = K2 recovers ordinary proper coloring.

pub mod canon;
pub mod constructions;
pub mod error;
pub mod g6;
pub mod graph;
pub mod minimality;
pub mod oracle;
pub mod solver;
pub mod subiso;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use solver::{chi_g, is_uniquely_colorable, Partition, SolveResult, UniquenessResult};
pub use subiso::{find_embedding, is_g_free, Embedding, Pattern};
