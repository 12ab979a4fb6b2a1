//! Chordality via maximum cardinality search.

use crate::graph::{SimpleGraph, VertexSet};

use super::certificate::Certificate;
use super::holes::{find_hole, Parity};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// `order[i]` is eliminated `i`-th; each vertex's later neighbors form a clique.
    Chordal {
        order: Vec<usize>,
    },
    NotChordal {
        hole: Certificate,
    },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Chordality test with a verified perfect elimination ordering, or the
/// least canonical hole.
pub fn is_chordal(g: &SimpleGraph) -> Chordality {
    let order = mcs_elimination_order(g);
    if is_perfect_elimination(g, &order) {
        Chordality::Chordal { order }
    } else {
        let hole = find_hole(g, Parity::Any, 4).expect("a graph without a perfect elimination order has a hole");
        Chordality::NotChordal { hole }
    }
}

/// Reverse of a maximum cardinality search visit order (ties to the least index).
pub fn mcs_elimination_order(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut left = g.vertices();
    let mut visit = Vec::with_capacity(n);
    while !left.is_empty() {
        let v = left
            .iter()
            .max_by_key(|&u| (weight[u], std::cmp::Reverse(u)))
            .expect("non-empty");
        left.remove(v);
        visit.push(v);
        for u in g.neighbors(v) & left {
            weight[u] += 1;
        }
    }
    visit.reverse();
    visit
}

/// True iff every vertex's neighbors later in `order` form a clique.
pub fn is_perfect_elimination(g: &SimpleGraph, order: &[usize]) -> bool {
    let mut later = g.vertices();
    for &v in order {
        later.remove(v);
        if !g.is_clique(g.neighbors(v) & later) {
            return false;
        }
    }
    true
}

/// Largest forward neighborhood along an elimination ordering.
pub fn max_forward_degree(g: &SimpleGraph, order: &[usize]) -> usize {
    let mut later = g.vertices();
    let mut best = 0;
    for &v in order {
        later.remove(v);
        best = best.max((g.neighbors(v) & later).len());
    }
    best
}

pub(crate) fn forward_neighbors(g: &SimpleGraph, order: &[usize], i: usize) -> VertexSet {
    let later: VertexSet = order[i + 1..].iter().collect();
    g.neighbors(order[i]) & later
}
