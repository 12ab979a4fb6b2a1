//! Verifiers for the structures used by the tree-growing argument
//! (kaleidoscopes, mirrored sets, palanquins, alignments, blurry copies,
//! strong blocks) and small finders that produce them.
//!
//! Verifiers are total: given a well-formed witness they return either
//! [`Outcome::Ok`] or the first clause that fails, in clause order. A
//! witness naming vertices outside the graph is a contract error.

mod alignment;
mod block;
mod blurry;
mod kaleidoscope;
mod search;
mod witness;

pub use alignment::{find_alignment, verify_alignment, verify_palanquin, Alignment, AlignmentSearch, Palanquin};
pub use block::{
    find_strong_block, internally_disjoint_count, verify_strong_block, BlockSearch, PathFamily, StrongBlockWitness,
};
pub use blurry::{extract_induced_from_blurry, verify_blurry, BlurryWitness, Extraction};
pub use kaleidoscope::{filter_mirrored, verify_kaleidoscope, verify_mirrored, Kaleidoscope, MirrorSpec};
pub use search::{anticomplete_family, banana_select, ramsey_split, RamseySplit};
pub use witness::{verify_witness, Witness, WitnessFile, WITNESS_SCHEMA};

pub(crate) use kaleidoscope::sees_well;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};

/// Clause tags, one per numbered condition of each structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Clause {
    K1,
    K2,
    K3,
    M1,
    M2,
    M3,
    P1,
    P2,
    A1,
    A2,
    A3,
    B1,
    B2,
    /// Fewer than `k` block vertices.
    BlockSize,
    /// Some pair lacks `k` distinct internally disjoint paths.
    BlockPaths,
    /// Paths of different pairs meet outside their shared ends.
    BlockCrossing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "clause", rename_all = "snake_case")]
pub enum Outcome {
    Ok,
    Violated(Clause),
}

impl Outcome {
    pub fn is_ok(self) -> bool {
        self == Outcome::Ok
    }

    fn from_clauses(r: std::result::Result<(), Clause>) -> Outcome {
        r.err().map_or(Outcome::Ok, Outcome::Violated)
    }
}

fn require(ok: bool, clause: Clause) -> std::result::Result<(), Clause> {
    if ok {
        Ok(())
    } else {
        Err(clause)
    }
}

fn check_range<'a>(g: &SimpleGraph, vs: impl IntoIterator<Item = &'a usize>) -> Result<()> {
    match vs.into_iter().find(|&&v| v >= g.n()) {
        Some(v) => Err(Error::contract(format!("vertex {v} out of range for n={}", g.n()))),
        None => Ok(()),
    }
}

fn check_set(g: &SimpleGraph, s: VertexSet) -> Result<()> {
    match s.max() {
        Some(v) if v >= g.n() => Err(Error::contract(format!("vertex {v} out of range for n={}", g.n()))),
        _ => Ok(()),
    }
}

/// Vertex set of a sequence, or `None` if it repeats a vertex.
fn distinct(seq: &[usize]) -> Option<VertexSet> {
    let set: VertexSet = seq.iter().collect();
    (set.len() == seq.len()).then_some(set)
}

/// A non-empty induced path without repeated vertices.
fn is_path(g: &SimpleGraph, p: &[usize]) -> bool {
    !p.is_empty() && distinct(p).is_some() && g.is_induced_path(p)
}

fn is_path_between(g: &SimpleGraph, p: &[usize], x: usize, y: usize) -> bool {
    p.len() >= 2 && p[0] == x && p[p.len() - 1] == y && is_path(g, p)
}

/// Interior of a path given as a sequence (empty for fewer than 3 vertices).
fn inner(p: &[usize]) -> VertexSet {
    if p.len() < 3 {
        VertexSet::EMPTY
    } else {
        p[1..p.len() - 1].iter().collect()
    }
}

/// True iff no two paths share an interior vertex.
fn internally_disjoint(paths: &[Vec<usize>]) -> bool {
    let mut seen = VertexSet::EMPTY;
    for p in paths {
        let i = inner(p);
        if !seen.is_disjoint(i) {
            return false;
        }
        seen = seen | i;
    }
    true
}
