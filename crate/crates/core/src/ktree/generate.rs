//! Graph generators: cones, complete rooted trees, random k-trees and
//! random graphs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{SimpleGraph, VertexSet};

use super::KTree;

/// `f` plus a new universal vertex `f.n()`.
pub fn cone(f: &SimpleGraph) -> SimpleGraph {
    f.with_vertex(f.vertices()).expect("cone exceeds the vertex cap")
}

/// The rooted tree whose root (vertex 0) has `d` children, every other
/// internal vertex has `d` children, and all leaves sit at depth `r`.
/// Vertices are numbered breadth-first.
pub fn gen_tdr(d: usize, r: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    let mut level = vec![0usize];
    let mut next_id = 1;
    for _ in 0..r {
        let mut next = Vec::with_capacity(level.len() * d);
        for &p in &level {
            for _ in 0..d {
                edges.push((p, next_id));
                next.push(next_id);
                next_id += 1;
            }
        }
        level = next;
    }
    SimpleGraph::from_edges(next_id, &edges).expect("tree exceeds the vertex cap")
}

/// A random k-tree on `h >= k` vertices: start from `K_k` and attach each
/// new vertex to a uniformly chosen existing k-clique.
pub fn random_ktree<R: Rng>(k: usize, h: usize, rng: &mut R) -> KTree {
    assert!(k >= 1 && h >= k, "need 1 <= k <= h");
    let mut adj = vec![VertexSet::EMPTY; h];
    for u in 0..k {
        for v in u + 1..k {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    let mut cliques: Vec<VertexSet> = vec![VertexSet::full(k)];
    for v in k..h {
        let base = *cliques.choose(rng).expect("at least one clique");
        for u in base {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        for u in base {
            cliques.push(base.without(u).with(v));
        }
    }
    let graph = SimpleGraph::from_adjacency(adj).expect("construction is symmetric");
    // later vertices are eliminated first
    let order = (0..h).rev().collect();
    KTree { graph, k, order }
}

/// `G(n, p)` random graph.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, &edges).expect("n within cap")
}
