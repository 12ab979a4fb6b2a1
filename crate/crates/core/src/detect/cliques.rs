//! Exact clique, stable-set and biclique searches by branch and bound.

use crate::graph::{SimpleGraph, VertexSet};

use super::certificate::Certificate;

/// Size of a largest clique.
pub fn clique_number(g: &SimpleGraph) -> usize {
    let mut best = VertexSet::EMPTY;
    max_clique(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best.len()
}

/// A maximum clique (lexicographically first found).
pub fn maximum_clique(g: &SimpleGraph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    max_clique(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

fn max_clique(g: &SimpleGraph, current: VertexSet, mut cand: VertexSet, best: &mut VertexSet) {
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current;
        }
        return;
    }
    while let Some(v) = cand.min() {
        if current.len() + cand.len() <= best.len() {
            return;
        }
        max_clique(g, current.with(v), cand & g.neighbors(v), best);
        cand.remove(v);
    }
    if current.len() > best.len() {
        *best = current;
    }
}

/// A clique on exactly `t` vertices inside `within`, if any.
pub fn find_clique_within(g: &SimpleGraph, within: VertexSet, t: usize) -> Option<VertexSet> {
    fn go(g: &SimpleGraph, current: VertexSet, mut cand: VertexSet, t: usize) -> Option<VertexSet> {
        if current.len() == t {
            return Some(current);
        }
        while let Some(v) = cand.min() {
            if current.len() + cand.len() < t {
                return None;
            }
            cand.remove(v);
            if let Some(found) = go(g, current.with(v), cand & g.neighbors(v), t) {
                return Some(found);
            }
        }
        None
    }
    go(g, VertexSet::EMPTY, within, t)
}

/// A `K_t` in `g`, as a certificate.
pub fn has_clique(g: &SimpleGraph, t: usize) -> Option<Certificate> {
    find_clique_within(g, g.vertices(), t).map(|s| Certificate::Clique { vertices: s.to_vec() })
}

/// A stable set on exactly `s` vertices inside `within`, if any.
pub fn find_stable_within(g: &SimpleGraph, within: VertexSet, s: usize) -> Option<VertexSet> {
    fn go(g: &SimpleGraph, current: VertexSet, mut cand: VertexSet, s: usize) -> Option<VertexSet> {
        if current.len() == s {
            return Some(current);
        }
        while let Some(v) = cand.min() {
            if current.len() + cand.len() < s {
                return None;
            }
            cand.remove(v);
            if let Some(found) = go(g, current.with(v), cand - g.neighbors(v), s) {
                return Some(found);
            }
        }
        None
    }
    go(g, VertexSet::EMPTY, within, s)
}

/// An induced `K_{s,s}`: two disjoint stable `s`-sets complete to each other.
pub fn has_biclique(g: &SimpleGraph, s: usize) -> Option<Certificate> {
    assert!(s >= 1, "biclique side must be positive");
    fn go(
        g: &SimpleGraph,
        left: VertexSet,
        mut cand: VertexSet,
        common: VertexSet,
        s: usize,
    ) -> Option<(VertexSet, VertexSet)> {
        if left.len() == s {
            return find_stable_within(g, common, s).map(|right| (left, right));
        }
        while let Some(v) = cand.min() {
            if left.len() + cand.len() < s {
                return None;
            }
            cand.remove(v);
            let next_common = common & g.neighbors(v);
            if next_common.len() < s {
                continue;
            }
            if let Some(found) = go(g, left.with(v), cand - g.neighbors(v), next_common, s) {
                return Some(found);
            }
        }
        None
    }
    let all = g.vertices();
    go(g, VertexSet::EMPTY, all, all, s).map(|(l, r)| Certificate::Biclique {
        left: l.to_vec(),
        right: r.to_vec(),
    })
}
