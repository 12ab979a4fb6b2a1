//! Embedding a chordal graph with no `K_{k+2}` as an induced subgraph of a
//! k-tree, following the inductive construction vertex by vertex.

use crate::detect::chordal::{is_chordal, Chordality};
use crate::detect::cliques::clique_number;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet, MAX_VERTICES};

use super::{Embedding, KTree};

/// A perfect elimination ordering (simplicial vertices first), if `h` is chordal.
pub fn dirac_order(h: &SimpleGraph) -> Option<Vec<usize>> {
    match is_chordal(h) {
        Chordality::Chordal { order } => Some(order),
        Chordality::NotChordal { .. } => None,
    }
}

/// Builds a k-tree containing `h` as an induced subgraph. Vertices of `h`
/// keep their indices; the embedding is the identity.
pub fn embed_in_ktree(h: &SimpleGraph, k: usize) -> Result<(KTree, Embedding)> {
    if k == 0 {
        return Err(Error::precondition("k must be at least 1"));
    }
    if let Chordality::NotChordal { hole } = is_chordal(h) {
        return Err(Error::precondition(format!("graph is not chordal: {hole:?}")));
    }
    let omega = clique_number(h);
    if omega >= k + 2 {
        return Err(Error::precondition(format!(
            "graph contains K_{} (clique number {omega})",
            k + 2
        )));
    }
    let identity: Embedding = (0..h.n()).collect();
    if h.n() == k && omega == k {
        let order = (0..k).collect();
        return Ok((
            KTree {
                graph: h.clone(),
                k,
                order,
            },
            identity,
        ));
    }

    // join the components through a hub adjacent to the least vertex of each
    let comps = h.components();
    let host = if comps.len() > 1 {
        let hub_nbrs: VertexSet = comps
            .iter()
            .map(|&c| c.min().expect("components are non-empty"))
            .collect();
        h.with_vertex(hub_nbrs)?
    } else {
        h.clone()
    };
    let order = dirac_order(&host).expect("adding a hub keeps the graph chordal");

    let mut b = Builder {
        adj: vec![VertexSet::EMPTY; host.n()],
        order: Vec::new(),
    };
    if host.n() == 0 {
        b.order = b.fresh_clique(k)?;
    } else {
        // the last vertex alone, padded to a k-clique
        let last = *order.last().expect("non-empty");
        let mut base = vec![last];
        for _ in 1..k {
            let v = b.fresh()?;
            for &u in &base {
                b.connect(u, v);
            }
            base.push(v);
        }
        b.order = base;
        let mut left = VertexSet::singleton(last);
        for &x0 in order.iter().rev().skip(1) {
            let nbrs = host.neighbors(x0) & left;
            b.attach(x0, nbrs, k)?;
            left.insert(x0);
        }
    }
    let graph = SimpleGraph::from_adjacency(b.adj)?;
    Ok((
        KTree {
            graph,
            k,
            order: b.order,
        },
        identity,
    ))
}

struct Builder {
    adj: Vec<VertexSet>,
    order: Vec<usize>,
}

impl Builder {
    fn fresh(&mut self) -> Result<usize> {
        if self.adj.len() == MAX_VERTICES {
            return Err(Error::TooLarge {
                n: MAX_VERTICES + 1,
                cap: MAX_VERTICES,
            });
        }
        self.adj.push(VertexSet::EMPTY);
        Ok(self.adj.len() - 1)
    }

    fn fresh_clique(&mut self, k: usize) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for _ in 0..k {
            let v = self.fresh()?;
            for &u in &out {
                self.connect(u, v);
            }
            out.push(v);
        }
        Ok(out)
    }

    fn connect(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    fn position(&self, v: usize) -> usize {
        self.order.iter().position(|&u| u == v).expect("vertex is ordered")
    }

    /// A k-clique of the current k-tree containing the clique `nbrs`.
    fn extend_clique(&self, nbrs: VertexSet, k: usize) -> VertexSet {
        let h = self.order.len();
        let x = nbrs
            .iter()
            .min_by_key(|&v| self.position(v))
            .expect("neighborhood is non-empty");
        let px = self.position(x);
        if px >= h - k {
            // x, and with it all of `nbrs`, lies in the terminal k-clique
            return self.order[h - k..].iter().collect();
        }
        let later: VertexSet = self.order[px + 1..].iter().collect();
        let big = (self.adj[x] & later).with(x);
        let drop = (big - nbrs).max().expect("a (k+1)-clique strictly contains nbrs");
        big.without(drop)
    }

    /// Adds `x0` with neighbors `nbrs` among the current vertices, plus
    /// `k - |nbrs|` new vertices, all placed at the front of the order.
    fn attach(&mut self, x0: usize, nbrs: VertexSet, k: usize) -> Result<()> {
        let clique = if nbrs.is_empty() {
            self.order[self.order.len() - k..].iter().collect()
        } else {
            self.extend_clique(nbrs, k)
        };
        let ys: Vec<usize> = (clique - nbrs).to_vec();
        let m = ys.len();
        let mut xs = vec![x0];
        for _ in 0..m {
            xs.push(self.fresh()?);
        }
        for i in 0..=m {
            for y in nbrs {
                self.connect(xs[i], y);
            }
            for &y in &ys[..i] {
                self.connect(xs[i], y);
            }
            for j in i + 1..=m {
                self.connect(xs[i], xs[j]);
            }
        }
        let mut order = xs;
        order.append(&mut self.order);
        self.order = order;
        Ok(())
    }
}
