//! Prism search anchored at a pair of disjoint triangles.

use crate::graph::{SimpleGraph, VertexSet};

use super::certificate::Certificate;
use super::paths::{induced_paths, separated_triple, Strand};

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// All triangles as ascending triples, in lexicographic order.
pub fn triangles(g: &SimpleGraph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in g.neighbors(u).above(u) {
            for w in (g.neighbors(u) & g.neighbors(v)).above(v) {
                out.push([u, v, w]);
            }
        }
    }
    out
}

/// The first prism found over disjoint triangle pairs in lexicographic
/// order and the six matchings between them.
pub fn find_prism(g: &SimpleGraph) -> Option<Certificate> {
    let tri = triangles(g);
    for (i, ta) in tri.iter().enumerate() {
        let sa: VertexSet = ta.iter().collect();
        for tb in &tri[i + 1..] {
            let sb: VertexSet = tb.iter().collect();
            if !sa.is_disjoint(sb) {
                continue;
            }
            for sigma in &PERMUTATIONS {
                let tb = [tb[sigma[0]], tb[sigma[1]], tb[sigma[2]]];
                if let Some(cert) = prism_on(g, *ta, tb) {
                    return Some(cert);
                }
            }
        }
    }
    None
}

/// A prism whose paths join `ta[i]` to `tb[i]`, if one exists.
pub fn prism_on(g: &SimpleGraph, ta: [usize; 3], tb: [usize; 3]) -> Option<Certificate> {
    // the only edges across different paths are the triangle edges
    for i in 0..3 {
        for j in 0..3 {
            if i != j && g.has_edge(ta[i], tb[j]) {
                return None;
            }
        }
    }
    let frame: VertexSet = ta.iter().chain(&tb).collect();
    let mut lists: Vec<Vec<Strand>> = Vec::with_capacity(3);
    for i in 0..3 {
        let others = frame.without(ta[i]).without(tb[i]);
        let pool = g.vertices() - frame - g.neighborhood_of(others);
        let paths = induced_paths(g, ta[i], tb[i], pool);
        if paths.is_empty() {
            return None;
        }
        lists.push(paths.into_iter().map(|p| Strand::new(g, p)).collect());
    }
    let [i, j, k] = separated_triple([&lists[0], &lists[1], &lists[2]])?;
    Some(Certificate::Prism {
        triangles: [ta, tb],
        paths: [
            lists[0][i].path.clone(),
            lists[1][j].path.clone(),
            lists[2][k].path.clone(),
        ],
    })
}
