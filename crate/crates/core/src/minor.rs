//! The triangle minor: contract an edge `z1 z2` to a vertex `z` and keep
//! only the edges from `z` to common neighbors of `z1` and `z2`.

use serde::{Deserialize, Serialize};

use crate::detect::certificate::Certificate;
use crate::detect::class::{in_class_e, Verdict};
use crate::detect::wheel::{class_of, WheelClass};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};
use crate::io::write_graph6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleMinor {
    pub graph: SimpleGraph,
    /// Index of the contracted vertex: the smaller of `z1`, `z2`.
    pub z: usize,
    /// Old index to new index; both `z1` and `z2` map to `z`.
    pub map: Vec<usize>,
}

/// Contracts the edge `z1 z2`.
pub fn triangle_minor(g: &SimpleGraph, z1: usize, z2: usize) -> Result<TriangleMinor> {
    if z1 >= g.n() || z2 >= g.n() {
        return Err(Error::contract("vertex out of range"));
    }
    if !g.has_edge(z1, z2) {
        return Err(Error::contract(format!("{z1} and {z2} are not adjacent")));
    }
    let (lo, hi) = (z1.min(z2), z1.max(z2));
    let map: Vec<usize> = (0..g.n())
        .map(|v| match v {
            _ if v == hi => lo,
            _ if v > hi => v - 1,
            _ => v,
        })
        .collect();
    let common = g.neighbors(z1) & g.neighbors(z2);
    let relabel = |s: VertexSet| -> VertexSet { s.iter().map(|v| map[v]).collect() };
    let mut adj = vec![VertexSet::EMPTY; g.n() - 1];
    for v in g.vertices().without(lo).without(hi) {
        adj[map[v]] = relabel(g.neighbors(v).without(lo).without(hi));
        if common.contains(v) {
            adj[map[v]].insert(lo);
        }
    }
    adj[lo] = relabel(common);
    Ok(TriangleMinor {
        graph: SimpleGraph::from_adjacency_unchecked(adj),
        z: lo,
        map,
    })
}

/// An edge `z1 z2` (`z1 < z2`) together with its common neighborhood.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrianglePair {
    pub z1: usize,
    pub z2: usize,
    pub common: VertexSet,
    /// The common neighborhood is stable and all its members have degree at most three.
    pub eligible: bool,
}

/// Every edge of `g` as a [`TrianglePair`], in edge order.
pub fn triangle_pairs(g: &SimpleGraph) -> Vec<TrianglePair> {
    g.edges()
        .map(|(z1, z2)| {
            let common = g.neighbors(z1) & g.neighbors(z2);
            let eligible = g.is_stable(common) && common.iter().all(|c| g.degree(c) <= 3);
            TrianglePair {
                z1,
                z2,
                common,
                eligible,
            }
        })
        .collect()
}

/// Edges whose common neighborhood is a stable set of vertices of degree at
/// most three (an empty common neighborhood qualifies).
pub fn eligible_pairs(g: &SimpleGraph) -> Vec<TrianglePair> {
    triangle_pairs(g).into_iter().filter(|p| p.eligible).collect()
}

/// A minor that left the class, with the structure found in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorViolation {
    pub host: String,
    pub z1: usize,
    pub z2: usize,
    pub minor: String,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MinorCheck {
    /// The host is not in the class; the structure found is attached.
    HypothesisNotMet { certificate: Certificate },
    Checked {
        pairs: usize,
        violations: Vec<MinorViolation>,
    },
}

/// For a host in the class, checks every eligible pair's minor for membership.
pub fn check_thm31(g: &SimpleGraph) -> MinorCheck {
    match in_class_e(g) {
        Verdict::Violation { certificate } => MinorCheck::HypothesisNotMet { certificate },
        Verdict::Member => {
            let (pairs, violations) = check_minors_with(g, &|g, z1, z2| {
                triangle_minor(g, z1, z2).expect("eligible pairs are edges")
            });
            MinorCheck::Checked { pairs, violations }
        }
    }
}

/// Runs `minor` on every eligible pair of `g` (assumed in the class) and
/// collects minors that leave the class. Returns the number of pairs tried.
pub fn check_minors_with(
    g: &SimpleGraph,
    minor: &dyn Fn(&SimpleGraph, usize, usize) -> TriangleMinor,
) -> (usize, Vec<MinorViolation>) {
    let pairs = eligible_pairs(g);
    let mut violations = Vec::new();
    for p in &pairs {
        let m = minor(g, p.z1, p.z2);
        if let Verdict::Violation { certificate } = in_class_e(&m.graph) {
            violations.push(MinorViolation {
                host: write_graph6(g),
                z1: p.z1,
                z2: p.z2,
                minor: write_graph6(&m.graph),
                certificate,
            });
        }
    }
    (pairs.len(), violations)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum AdjacentCentersCheck {
    Skip { reason: String },
    Pass { z1: WheelClass, z2: WheelClass },
    Violation { z1: WheelClass, z2: WheelClass },
}

/// Two adjacent vertices off a hole, each with a neighbor on it and no
/// common neighbor on it, in a host from the class: exactly one of them
/// must see the hole as a clique of size at least two.
pub fn check_thm32(g: &SimpleGraph, cycle: &[usize], z1: usize, z2: usize) -> AdjacentCentersCheck {
    if !in_class_e(g).is_member() {
        return skip("host is not in the class");
    }
    check_adjacent_centers(g, cycle, z1, z2)
}

/// [`check_thm32`] without re-checking class membership of the host.
pub fn check_adjacent_centers(g: &SimpleGraph, cycle: &[usize], z1: usize, z2: usize) -> AdjacentCentersCheck {
    let n = g.n();
    if z1 >= n || z2 >= n || cycle.iter().any(|&c| c >= n) {
        return skip("vertex out of range");
    }
    let rim: VertexSet = cycle.iter().collect();
    if rim.len() != cycle.len() || !g.is_hole(cycle) {
        return skip("sequence is not a hole");
    }
    if rim.contains(z1) || rim.contains(z2) || z1 == z2 || !g.has_edge(z1, z2) {
        return skip("z1, z2 must be distinct adjacent vertices off the hole");
    }
    let (n1, n2) = (g.neighbors(z1) & rim, g.neighbors(z2) & rim);
    if n1.is_empty() || n2.is_empty() {
        return skip("each of z1, z2 needs a neighbor on the hole");
    }
    if !n1.is_disjoint(n2) {
        return skip("z1 and z2 share a neighbor on the hole");
    }
    let (c1, c2) = (class_of(g, n1), class_of(g, n2));
    if (c1 == WheelClass::Bad) != (c2 == WheelClass::Bad) {
        AdjacentCentersCheck::Pass { z1: c1, z2: c2 }
    } else {
        AdjacentCentersCheck::Violation { z1: c1, z2: c2 }
    }
}

fn skip(reason: &str) -> AdjacentCentersCheck {
    AdjacentCentersCheck::Skip {
        reason: reason.to_string(),
    }
}
