//! Tools for the class of (C4, theta, prism, even wheel)-free graphs:
//! detectors with checkable certificates, the triangle minor, k-tree
//! embeddings, proof-structure verifiers and exhaustive small-graph sweeps.

pub mod detect;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod ktree;
pub mod minor;
pub mod predicates;

pub use error::{Error, Result};
pub use graph::{PathSeq, SimpleGraph, VertexSet, MAX_VERTICES};
pub use io::{parse_edgelist, parse_graph6, write_edgelist, write_graph6};
