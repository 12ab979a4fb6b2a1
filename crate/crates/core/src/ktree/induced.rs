//! Induced-subgraph isomorphism by backtracking over bitsets.

use crate::graph::{SimpleGraph, VertexSet};

/// `map[u]` is the image in the host of pattern vertex `u`.
pub type Embedding = Vec<usize>;

/// True iff `map` is injective and preserves adjacency and non-adjacency.
pub fn is_induced_embedding(g: &SimpleGraph, h: &SimpleGraph, map: &[usize]) -> bool {
    if map.len() != h.n() || map.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let image: VertexSet = map.iter().collect();
    if image.len() != map.len() {
        return false;
    }
    (0..h.n()).all(|u| (u + 1..h.n()).all(|w| h.has_edge(u, w) == g.has_edge(map[u], map[w])))
}

/// An induced copy of `h` in `g`, if any.
pub fn contains_induced(g: &SimpleGraph, h: &SimpleGraph) -> Option<Embedding> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return None;
    }
    // place pattern vertices connected-first, high degree first
    let mut seq = Vec::with_capacity(h.n());
    let mut placed = VertexSet::EMPTY;
    while seq.len() < h.n() {
        let left = h.vertices() - placed;
        let attached = left & h.neighborhood_of(placed);
        let pool = if attached.is_empty() { left } else { attached };
        let u = pool
            .iter()
            .max_by_key(|&u| ((h.neighbors(u) & placed).len(), h.degree(u), std::cmp::Reverse(u)))
            .expect("pool is non-empty");
        seq.push(u);
        placed.insert(u);
    }
    let mut map = vec![usize::MAX; h.n()];
    if place(g, h, &seq, 0, VertexSet::EMPTY, &mut map) {
        Some(map)
    } else {
        None
    }
}

fn place(g: &SimpleGraph, h: &SimpleGraph, seq: &[usize], depth: usize, used: VertexSet, map: &mut [usize]) -> bool {
    if depth == seq.len() {
        return true;
    }
    let u = seq[depth];
    let mut cand = g.vertices() - used;
    for &w in &seq[..depth] {
        if h.has_edge(u, w) {
            cand &= g.neighbors(map[w]);
        } else {
            cand = cand - g.neighbors(map[w]);
        }
    }
    for v in cand {
        if g.degree(v) < h.degree(u) {
            continue;
        }
        map[u] = v;
        if place(g, h, seq, depth + 1, used.with(v), map) {
            return true;
        }
    }
    map[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let e = contains_induced(&SimpleGraph::complete(4), &SimpleGraph::complete(3)).unwrap();
        assert!(is_induced_embedding(
            &SimpleGraph::complete(4),
            &SimpleGraph::complete(3),
            &e
        ));
        let e = contains_induced(&SimpleGraph::cycle(6), &SimpleGraph::path(4)).unwrap();
        assert!(is_induced_embedding(&SimpleGraph::cycle(6), &SimpleGraph::path(4), &e));
        assert_eq!(
            contains_induced(&SimpleGraph::complete_bipartite(3, 3), &SimpleGraph::complete(3)),
            None
        );
    }

    #[test]
    fn induced_not_just_subgraph() {
        // C4 is a subgraph of K4 but not an induced one
        assert_eq!(
            contains_induced(&SimpleGraph::complete(4), &SimpleGraph::cycle(4)),
            None
        );
        assert!(contains_induced(&SimpleGraph::cycle(5), &SimpleGraph::empty(2)).is_some());
        assert_eq!(contains_induced(&SimpleGraph::cycle(5), &SimpleGraph::empty(3)), None);
        assert_eq!(
            contains_induced(&SimpleGraph::empty(3), &SimpleGraph::empty(0)),
            Some(vec![])
        );
    }

    #[test]
    fn embedding_checks() {
        let g = SimpleGraph::path(3);
        assert!(is_induced_embedding(&g, &SimpleGraph::empty(2), &[0, 2]));
        assert!(!is_induced_embedding(&g, &SimpleGraph::empty(2), &[0, 1]));
        assert!(!is_induced_embedding(&g, &SimpleGraph::empty(2), &[0, 0]));
        assert!(!is_induced_embedding(&g, &SimpleGraph::empty(2), &[0, 3]));
    }
}
