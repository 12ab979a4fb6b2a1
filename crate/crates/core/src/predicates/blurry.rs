use serde::{Deserialize, Serialize};

use crate::detect::chordal::forward_neighbors;
use crate::detect::cliques::has_clique;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};
use crate::ktree::{contains_induced, Embedding, KTree};

use super::{check_range, distinct, require, Clause, Outcome};

/// A set `Z` (listed in elimination order) carrying a spanning 2-tree `Y`
/// isomorphic to `target`, such that every other edge of `G[Z]` lands on
/// both forward neighbors of its earlier end.
///
/// `target.order[i]` corresponds to `order[i]`; the last two entries form
/// the base edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlurryWitness {
    pub order: Vec<usize>,
    pub y_edges: Vec<(usize, usize)>,
    pub target: KTree,
}

impl BlurryWitness {
    pub fn z(&self) -> VertexSet {
        self.order.iter().collect()
    }

    /// The image of each target vertex.
    pub fn embedding(&self) -> Embedding {
        let mut map = vec![0; self.order.len()];
        for (&u, &v) in self.target.order.iter().zip(&self.order) {
            map[u] = v;
        }
        map
    }

    /// Edges of `G[Z]` that are not in `Y`.
    pub fn extra_edges(&self, g: &SimpleGraph) -> Vec<(usize, usize)> {
        let y = self.y_graph(g.n());
        let z = self.z();
        z.iter()
            .flat_map(|u| (g.neighbors(u) & z).above(u).iter().map(move |v| (u, v)))
            .filter(|&(u, v)| !y.has_edge(u, v))
            .collect()
    }

    fn y_graph(&self, n: usize) -> SimpleGraph {
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in &self.y_edges {
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        SimpleGraph::from_adjacency(adj).expect("symmetric by construction")
    }

    fn check_form(&self, g: &SimpleGraph) -> Result<()> {
        check_range(
            g,
            self.order.iter().chain(self.y_edges.iter().flat_map(|(u, v)| [u, v])),
        )?;
        if distinct(&self.order).is_none() || self.order.len() < 2 {
            return Err(Error::contract("order must list at least two distinct vertices"));
        }
        if self.target.k != 2 || self.target.h() != self.order.len() || !self.target.validate()?.is_valid() {
            return Err(Error::contract("target is not a 2-tree on |Z| vertices"));
        }
        Ok(())
    }
}

pub fn verify_blurry(g: &SimpleGraph, w: &BlurryWitness) -> Result<Outcome> {
    w.check_form(g)?;
    Ok(Outcome::from_clauses(blurry_clauses(g, w)))
}

fn blurry_clauses(g: &SimpleGraph, w: &BlurryWitness) -> std::result::Result<(), Clause> {
    let z = w.z();
    let y = w.y_graph(g.n());
    let map = w.embedding();
    let t = &w.target.graph;
    let mut listed: Vec<(usize, usize)> = w.y_edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    listed.sort();
    listed.dedup();
    require(
        listed.len() == w.y_edges.len()
            && w.y_edges
                .iter()
                .all(|&(u, v)| z.contains(u) && z.contains(v) && g.has_edge(u, v))
            && y.edge_count() == t.edge_count()
            && t.edges().all(|(a, b)| y.has_edge(map[a], map[b])),
        Clause::B1,
    )?;
    for (i, &u) in w.order.iter().enumerate() {
        let fwd = forward_neighbors(&y, &w.order, i);
        for &v in &w.order[i + 1..] {
            if g.has_edge(u, v) && !y.has_edge(u, v) {
                require(fwd.is_subset(g.neighbors(v)), Clause::B2)?;
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "path", rename_all = "snake_case")]
pub enum Extraction {
    /// `Z` itself induces the target.
    Direct { embedding: Embedding },
    /// The host has a `K_4` (or `Z` has extra edges): general search.
    Fallback { embedding: Option<Embedding> },
}

/// An induced copy of the target. In a `K_4`-free host an extra edge of
/// `G[Z]` together with the two forward neighbors it must see would form a
/// `K_4`, so `Z` itself is induced and the direct path applies.
pub fn extract_induced_from_blurry(g: &SimpleGraph, w: &BlurryWitness) -> Result<Extraction> {
    if let Outcome::Violated(c) = verify_blurry(g, w)? {
        return Err(Error::precondition(format!("not a blurry copy ({c:?} fails)")));
    }
    if has_clique(g, 4).is_none() && w.extra_edges(g).is_empty() {
        return Ok(Extraction::Direct {
            embedding: w.embedding(),
        });
    }
    Ok(Extraction::Fallback {
        embedding: contains_induced(g, &w.target.graph),
    })
}
