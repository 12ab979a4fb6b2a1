//! Theta search anchored at the pair of ends.

use crate::graph::SimpleGraph;

use super::certificate::Certificate;
use super::cliques::find_stable_within;
use super::paths::{induced_paths, Strand};

/// The first theta found when end pairs `(a, b)`, `a < b`, are tried in
/// lexicographic order; paths are listed from `a` to `b`.
pub fn find_theta(g: &SimpleGraph) -> Option<Certificate> {
    let n = g.n();
    // each end needs three pairwise non-adjacent neighbors
    let viable: Vec<bool> = (0..n)
        .map(|v| find_stable_within(g, g.neighbors(v), 3).is_some())
        .collect();
    for a in (0..n).filter(|&a| viable[a]) {
        for b in (a + 1..n).filter(|&b| viable[b] && !g.has_edge(a, b)) {
            if let Some(cert) = theta_with_ends(g, a, b) {
                return Some(cert);
            }
        }
    }
    None
}

/// A theta with ends exactly `a` and `b`, if one exists.
pub fn theta_with_ends(g: &SimpleGraph, a: usize, b: usize) -> Option<Certificate> {
    if a == b || g.has_edge(a, b) {
        return None;
    }
    let strands: Vec<Strand> = induced_paths(g, a, b, g.vertices())
        .into_iter()
        .map(|p| Strand::new(g, p))
        .collect();
    if strands.len() < 3 {
        return None;
    }
    (0..strands.len()).find_map(|i| ordered_scan(&strands, i, a, b))
}

fn ordered_scan(strands: &[Strand], i: usize, a: usize, b: usize) -> Option<Certificate> {
    let p = &strands[i];
    for j in i + 1..strands.len() {
        if !p.separated(&strands[j]) {
            continue;
        }
        for k in j + 1..strands.len() {
            if p.separated(&strands[k]) && strands[j].separated(&strands[k]) {
                return Some(Certificate::Theta {
                    ends: [a, b],
                    paths: [p.path.clone(), strands[j].path.clone(), strands[k].path.clone()],
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let k23 = SimpleGraph::complete_bipartite(2, 3);
        let cert = find_theta(&k23).expect("K23 is a theta");
        assert_eq!(cert.validate(&k23), Ok(()));
        let k33 = SimpleGraph::complete_bipartite(3, 3);
        assert_eq!(find_theta(&k33).unwrap().validate(&k33), Ok(()));
        assert_eq!(find_theta(&SimpleGraph::cycle(6)), None);
    }

    #[test]
    fn long_theta() {
        // ends 0 and 1, paths of lengths 2, 3, 4
        let g = SimpleGraph::from_edges(
            8,
            &[(0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 7), (7, 1)],
        )
        .unwrap();
        let cert = find_theta(&g).unwrap();
        assert_eq!(cert.validate(&g), Ok(()));
        assert!(find_theta(&g.with_edge(2, 3)).is_none());
    }
}
